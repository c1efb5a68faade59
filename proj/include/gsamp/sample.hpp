#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gsamp/edge_samplers.hpp"
#include "gsamp/errors.hpp"
#include "gsamp/exploration_samplers.hpp"
#include "gsamp/graph.hpp"
#include "gsamp/node_samplers.hpp"
#include "gsamp/random.hpp"
#include "gsamp/sampler_spec.hpp"
#include "gsamp/traverse.hpp"

namespace gsamp {

// The single public sampling entry point: validates the input graph,
// resolves the target against the method's budget kind, seeds a fresh
// random source from the spec, and dispatches. Identical (spec, graph,
// target) give bit-identical serialized results.
inline SampleResult sample(const SamplerSpec& spec, const Graph& graph, const TargetSize& target) {
  validate(graph);
  const std::uint64_t budget = target.resolve(spec.budget(), graph);
  RandomSource rng(spec.seed());
  std::vector<std::string> warnings;

  SampledGraph out;
  switch (spec.method()) {
    case Method::rn: out = sample_random_nodes(graph, budget, rng); break;
    case Method::rdn: out = sample_degree_weighted_nodes(graph, budget, rng); break;
    case Method::prn: out = sample_pagerank_weighted_nodes(graph, budget, rng, &warnings); break;
    case Method::re: out = sample_random_edges(graph, budget, rng); break;
    case Method::rne: out = sample_node_edge(graph, budget, rng); break;
    case Method::hrne: out = sample_hybrid_node_edge(graph, budget, spec.param("q"), rng); break;
    case Method::ties: out = sample_edges_total_induction(graph, budget, rng); break;
    case Method::pies: out = sample_edges_partial_induction(graph, budget, rng); break;
    case Method::bfs: out = sample_bfs_tree(graph, budget, rng); break;
    case Method::dfs: out = sample_dfs_tree(graph, budget, rng); break;
    case Method::sb:
      out = sample_snowball(graph, budget, static_cast<std::uint64_t>(spec.param("k")), rng);
      break;
    case Method::ff:
      out = sample_forest_fire(graph, budget, spec.param("p"), rng,
                               static_cast<std::uint64_t>(spec.param("rekindles")));
      break;
    case Method::cse: out = sample_community_expansion(graph, budget, rng); break;
    case Method::rnn: out = sample_node_neighborhood(graph, budget, rng); break;
    case Method::sp: out = sample_shortest_paths(graph, budget, rng); break;
    case Method::rw: out = sample_random_walk(graph, budget, rng); break;
    case Method::mhrw: out = sample_metropolis_hastings_walk(graph, budget, spec.param("alpha"), rng); break;
    case Method::rcmhrw:
      out = sample_rejection_constrained_walk(graph, budget, spec.param("alpha"), rng);
      break;
    case Method::nbtrw: out = sample_non_backtracking_walk(graph, budget, rng); break;
    case Method::cnrw: out = sample_circulating_neighbor_walk(graph, budget, rng); break;
    case Method::rwj: out = sample_random_walk_jump(graph, budget, spec.param("p_jump"), rng); break;
    case Method::cnarw: out = sample_common_neighbor_aware_walk(graph, budget, rng); break;
    case Method::frw:
      out = sample_frontier_walkers(graph, budget, static_cast<std::uint64_t>(spec.param("walkers")), rng);
      break;
    case Method::rwr: out = sample_random_walk_restart(graph, budget, spec.param("p_restart"), rng); break;
    case Method::lerw: out = sample_loop_erased_tree(graph, budget, rng); break;
  }

  SampleResult result;
  result.nodes_sampled = out.graph.node_count();
  result.edges_sampled = out.graph.edge_count();
  result.sample = std::move(out);
  result.method = std::string(spec.method_id());
  result.seed = spec.seed();
  result.params = spec.params();
  result.warnings = std::move(warnings);
  return result;
}

}  // namespace gsamp
