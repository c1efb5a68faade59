#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "gsamp/errors.hpp"
#include "gsamp/graph.hpp"
#include "gsamp/random.hpp"

namespace gsamp {

// Shared traversal primitives: the minimal graph-access surface the
// samplers are written against (degree, neighbors, random neighbor,
// shortest path, reachability).

inline NodeId random_neighbor(const Graph& graph, NodeId v, RandomSource& rng) {
  const auto adj = graph.neighbors(v);
  if (adj.empty()) throw ArgumentError("random_neighbor: node " + std::to_string(v) + " has no neighbors");
  return adj[rng.bounded(adj.size())];
}

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// BFS levels from `source`; unreached nodes stay at kUnreached.
inline std::vector<std::uint32_t> bfs_distances(const Graph& graph, NodeId source) {
  std::vector<std::uint32_t> dist(graph.node_count(), kUnreached);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : graph.neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& graph) {
  if (graph.node_count() == 0) return false;
  const auto dist = bfs_distances(graph, 0);
  for (std::uint32_t d : dist)
    if (d == kUnreached) return false;
  return true;
}

// One geodesic from u to v. When several exist, each backward step picks
// uniformly among the equal-distance predecessors, so ties are resolved
// by the caller's random source rather than by node order.
inline std::vector<NodeId> shortest_path(const Graph& graph, NodeId u, NodeId v, RandomSource& rng) {
  if (u == v) return {u};
  const auto dist = bfs_distances(graph, u);
  if (dist[v] == kUnreached) throw ArgumentError("shortest_path: nodes are not connected");
  std::vector<NodeId> path{v};
  NodeId current = v;
  std::vector<NodeId> preds;
  while (current != u) {
    preds.clear();
    for (NodeId w : graph.neighbors(current))
      if (dist[w] + 1 == dist[current]) preds.push_back(w);
    current = preds.size() == 1 ? preds[0] : preds[rng.bounded(preds.size())];
    path.push_back(current);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Gate run before every sampling call: inputs must be simple, undirected,
// connected graphs on consecutive ids with no orphaned nodes.
inline void validate(const Graph& graph) {
  if (graph.node_count() < 2)
    throw ValidationError(ValidationKind::Empty,
                          "graph has " + std::to_string(graph.node_count()) + " node(s), need at least 2");
  for (NodeId v = 0; v < graph.node_count(); ++v)
    if (graph.degree(v) == 0)
      throw ValidationError(ValidationKind::NonConsecutiveIds,
                            "node id " + std::to_string(v) + " has no incident edge");
  const auto dist = bfs_distances(graph, 0);
  for (NodeId v = 0; v < graph.node_count(); ++v)
    if (dist[v] == kUnreached)
      throw ValidationError(ValidationKind::NotConnected,
                            "node " + std::to_string(v) + " is unreachable from node 0");
}

}  // namespace gsamp
