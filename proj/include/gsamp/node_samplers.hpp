#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gsamp/errors.hpp"
#include "gsamp/graph.hpp"
#include "gsamp/pagerank.hpp"
#include "gsamp/random.hpp"

namespace gsamp {

// Node-selection samplers: pick a vertex set, return the induced subgraph.

namespace detail {

// Sequential weighted draws without replacement ("successive sampling"):
// each draw is proportional to the remaining weights.
inline std::set<NodeId> weighted_nodes_without_replacement(const Graph& graph,
                                                           std::vector<double> weights,
                                                           std::uint64_t node_target, RandomSource& rng) {
  const NodeId n = graph.node_count();
  std::vector<NodeId> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::set<NodeId> chosen;
  for (std::uint64_t draw = 0; draw < node_target; ++draw) {
    double total = 0.0;
    for (NodeId v : pool) total += weights[v];
    if (!(total > 0.0)) throw ArgumentError("weighted node draw: no positive weight remains");
    const double r = rng.uniform() * total;
    double acc = 0.0;
    std::size_t picked = pool.size() - 1;
    for (std::size_t i = 0; i + 1 < pool.size(); ++i) {
      acc += weights[pool[i]];
      if (r < acc) {
        picked = i;
        break;
      }
    }
    chosen.insert(pool[picked]);
    pool[picked] = pool.back();
    pool.pop_back();
  }
  return chosen;
}

}  // namespace detail

// RN: uniform node subset without replacement.
inline SampledGraph sample_random_nodes(const Graph& graph, std::uint64_t node_target, RandomSource& rng) {
  std::vector<NodeId> pool(graph.node_count());
  std::iota(pool.begin(), pool.end(), 0);
  rng.partial_shuffle(pool, node_target);
  std::set<NodeId> chosen(pool.begin(), pool.begin() + node_target);
  return induced_subgraph(graph, chosen);
}

// RDN: draws proportional to degree among the remaining nodes.
inline SampledGraph sample_degree_weighted_nodes(const Graph& graph, std::uint64_t node_target,
                                                 RandomSource& rng) {
  std::vector<double> weights(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) weights[v] = graph.degree(v);
  const auto chosen = detail::weighted_nodes_without_replacement(graph, std::move(weights), node_target, rng);
  return induced_subgraph(graph, chosen);
}

// PRN: draws proportional to PageRank scores computed once up front.
inline SampledGraph sample_pagerank_weighted_nodes(const Graph& graph, std::uint64_t node_target,
                                                   RandomSource& rng,
                                                   std::vector<std::string>* warnings = nullptr) {
  PageRankResult pr = pagerank(graph);
  if (!pr.converged && warnings != nullptr)
    warnings->push_back("pagerank did not converge within " + std::to_string(pr.iterations) +
                        " iterations; best iterate used");
  const auto chosen =
      detail::weighted_nodes_without_replacement(graph, std::move(pr.scores), node_target, rng);
  return induced_subgraph(graph, chosen);
}

}  // namespace gsamp
