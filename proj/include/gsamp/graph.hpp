#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gsamp/errors.hpp"

namespace gsamp {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

inline Edge ordered(NodeId u, NodeId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Immutable undirected simple graph over node ids {0, ..., n-1}.
// Adjacency is stored compressed with sorted per-node neighbor lists, so
// neighbor iteration is O(deg) and membership is O(log deg).
class Graph {
 public:
  Graph() = default;

  // `edges` must be free of self-loops and duplicates (in either
  // orientation); node_count must cover every endpoint.
  static Graph from_edges(NodeId node_count, std::span<const Edge> edges) {
    Graph g;
    g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
    for (const auto& [u, v] : edges) {
      if (u == v) throw ArgumentError("self-loop in edge set");
      if (u >= node_count || v >= node_count)
        throw ArgumentError("edge endpoint out of range: " + std::to_string(std::max(u, v)));
      ++g.offsets_[u + 1];
      ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.neighbors_.resize(g.offsets_.back());
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
      g.neighbors_[cursor[u]++] = v;
      g.neighbors_[cursor[v]++] = u;
    }
    for (NodeId v = 0; v < node_count; ++v) {
      auto list = g.mutable_neighbors(v);
      std::sort(list.begin(), list.end());
      if (std::adjacent_find(list.begin(), list.end()) != list.end())
        throw ArgumentError("duplicate edge incident to node " + std::to_string(v));
    }
    g.edge_count_ = edges.size();
    return g;
  }

  NodeId node_count() const noexcept { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::uint64_t edge_count() const noexcept { return edge_count_; }

  NodeId degree(NodeId v) const { return static_cast<NodeId>(offsets_[v + 1] - offsets_[v]); }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  bool has_edge(NodeId u, NodeId v) const {
    const auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
  }

  // Every edge once, as (u, v) with u < v, in ascending pair order.
  std::vector<Edge> edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (NodeId u = 0; u < node_count(); ++u)
      for (NodeId v : neighbors(u))
        if (u < v) result.emplace_back(u, v);
    return result;
  }

 private:
  std::span<NodeId> mutable_neighbors(NodeId v) {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  std::vector<std::uint64_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::uint64_t edge_count_ = 0;
};

// A re-indexed graph plus the map back to the ids it was cut from.
// original_ids[local] is ascending, so local order mirrors source order.
struct SampledGraph {
  Graph graph;
  std::vector<NodeId> original_ids;

  NodeId to_original(NodeId local) const { return original_ids[local]; }
};

// Builds a SampledGraph from node and edge sets expressed in source ids.
// Every edge endpoint must appear in `nodes`.
inline SampledGraph build_sampled(const std::set<NodeId>& nodes, std::span<const Edge> edges) {
  if (nodes.empty()) throw ArgumentError("sampled node set is empty");
  SampledGraph out;
  out.original_ids.assign(nodes.begin(), nodes.end());
  std::vector<NodeId> local_of;
  const NodeId max_id = out.original_ids.back();
  local_of.assign(static_cast<std::size_t>(max_id) + 1, 0);
  for (NodeId i = 0; i < out.original_ids.size(); ++i) local_of[out.original_ids[i]] = i;
  std::vector<Edge> local_edges;
  local_edges.reserve(edges.size());
  for (const auto& [u, v] : edges) local_edges.push_back(ordered(local_of[u], local_of[v]));
  out.graph = Graph::from_edges(static_cast<NodeId>(out.original_ids.size()), local_edges);
  return out;
}

// Subgraph induced by `nodes`: all source edges with both endpoints inside.
// Source ids are preserved through the id map.
inline SampledGraph induced_subgraph(const Graph& graph, const std::set<NodeId>& nodes) {
  if (nodes.empty()) throw ArgumentError("induced_subgraph: node set is empty");
  std::vector<char> member(graph.node_count(), 0);
  for (NodeId v : nodes) {
    if (v >= graph.node_count()) throw ArgumentError("induced_subgraph: node id out of range");
    member[v] = 1;
  }
  std::vector<Edge> kept;
  for (NodeId u : nodes)
    for (NodeId v : graph.neighbors(u))
      if (u < v && member[v]) kept.emplace_back(u, v);
  return build_sampled(nodes, kept);
}

// Graph spanned by an edge set: nodes are exactly the endpoints, source
// ids preserved. Duplicate mentions of an edge collapse.
inline SampledGraph graph_from_edges(std::span<const Edge> edges) {
  if (edges.empty()) throw ArgumentError("graph_from_edges: edge set is empty");
  std::set<NodeId> nodes;
  std::set<Edge> unique;
  for (const auto& [u, v] : edges) {
    if (u == v) throw ArgumentError("graph_from_edges: self-loop");
    nodes.insert(u);
    nodes.insert(v);
    unique.insert(ordered(u, v));
  }
  std::vector<Edge> dedup(unique.begin(), unique.end());
  return build_sampled(nodes, dedup);
}

}  // namespace gsamp
