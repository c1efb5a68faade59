#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "gsamp/errors.hpp"
#include "gsamp/graph.hpp"
#include "gsamp/random.hpp"
#include "gsamp/traverse.hpp"

namespace gsamp {

// Edge-selection samplers. RE/RNE/HRNE return the graph spanned by the
// chosen edges; TIES and PIES select edges to grow a node set and then
// induce (totally or partially) over it.

namespace detail {

// One node-edge draw: uniform node, then uniform incident edge.
inline Edge node_edge_draw(const Graph& graph, RandomSource& rng) {
  const NodeId u = static_cast<NodeId>(rng.bounded(graph.node_count()));
  const NodeId v = random_neighbor(graph, u, rng);
  return ordered(u, v);
}

}  // namespace detail

// RE: uniform edge subset without replacement (partial shuffle of the
// edge array).
inline SampledGraph sample_random_edges(const Graph& graph, std::uint64_t edge_target, RandomSource& rng) {
  auto edges = graph.edges();
  rng.partial_shuffle(edges, edge_target);
  edges.resize(edge_target);
  return graph_from_edges(edges);
}

// RNE: repeat node-edge draws, keeping distinct edges until the target.
inline SampledGraph sample_node_edge(const Graph& graph, std::uint64_t edge_target, RandomSource& rng) {
  std::set<Edge> chosen;
  while (chosen.size() < edge_target) chosen.insert(detail::node_edge_draw(graph, rng));
  std::vector<Edge> edges(chosen.begin(), chosen.end());
  return graph_from_edges(edges);
}

// HRNE: each step is a node-edge draw with probability q, otherwise a
// uniform edge draw.
inline SampledGraph sample_hybrid_node_edge(const Graph& graph, std::uint64_t edge_target, double q,
                                            RandomSource& rng) {
  const auto all_edges = graph.edges();
  std::set<Edge> chosen;
  while (chosen.size() < edge_target) {
    if (rng.bernoulli(q))
      chosen.insert(detail::node_edge_draw(graph, rng));
    else
      chosen.insert(all_edges[rng.bounded(all_edges.size())]);
  }
  std::vector<Edge> edges(chosen.begin(), chosen.end());
  return graph_from_edges(edges);
}

// TIES: uniform edge draws (with replacement) accumulate an endpoint set
// until it reaches node_target, then the whole induced subgraph over those
// endpoints is returned. The final draw may overshoot by one node; the
// overshoot is retained.
inline SampledGraph sample_edges_total_induction(const Graph& graph, std::uint64_t node_target,
                                                 RandomSource& rng) {
  const auto all_edges = graph.edges();
  std::set<NodeId> endpoints;
  while (endpoints.size() < node_target) {
    const auto& [u, v] = all_edges[rng.bounded(all_edges.size())];
    endpoints.insert(u);
    endpoints.insert(v);
  }
  return induced_subgraph(graph, endpoints);
}

// PIES: streams the edges in a seeded uniform permutation. While the node
// budget is open every arriving edge is kept along with its endpoints;
// afterwards an edge is kept only if both endpoints are already sampled.
inline SampledGraph sample_edges_partial_induction_ordered(const Graph& graph, std::uint64_t node_target,
                                                           std::span<const Edge> stream) {
  std::vector<char> sampled(graph.node_count(), 0);
  std::uint64_t sampled_count = 0;
  std::vector<Edge> retained;
  for (const auto& [u, v] : stream) {
    if (sampled_count < node_target) {
      sampled_count += !sampled[u] + !sampled[v];
      sampled[u] = sampled[v] = 1;
      retained.emplace_back(u, v);
    } else if (sampled[u] && sampled[v]) {
      retained.emplace_back(u, v);
    }
  }
  return graph_from_edges(retained);
}

inline SampledGraph sample_edges_partial_induction(const Graph& graph, std::uint64_t node_target,
                                                   RandomSource& rng) {
  auto stream = graph.edges();
  rng.shuffle(stream);
  return sample_edges_partial_induction_ordered(graph, node_target, stream);
}

}  // namespace gsamp
