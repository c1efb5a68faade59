#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "gsamp/graph.hpp"

namespace gsamp {

struct PageRankResult {
  std::vector<double> scores;  // sums to 1
  std::uint32_t iterations = 0;
  bool converged = false;
};

inline constexpr double kPageRankDamping = 0.85;
inline constexpr double kPageRankTolerance = 1e-9;
inline constexpr std::uint32_t kPageRankMaxIters = 100;

// Power iteration on the uniform-out-degree transition of the undirected
// graph. Iterates until the L1 change drops below `tolerance` or
// `max_iters` is reached; the best iterate is returned either way, with
// `converged` telling the caller which case it was.
inline PageRankResult pagerank(const Graph& graph, double damping = kPageRankDamping,
                               double tolerance = kPageRankTolerance,
                               std::uint32_t max_iters = kPageRankMaxIters) {
  const NodeId n = graph.node_count();
  PageRankResult result;
  result.scores.assign(n, 1.0 / n);
  std::vector<double> next(n);
  const double teleport = (1.0 - damping) / n;
  for (std::uint32_t iter = 0; iter < max_iters; ++iter) {
    for (NodeId v = 0; v < n; ++v) {
      double incoming = 0.0;
      for (NodeId u : graph.neighbors(v)) incoming += result.scores[u] / graph.degree(u);
      next[v] = teleport + damping * incoming;
    }
    double change = 0.0;
    double total = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      change += std::abs(next[v] - result.scores[v]);
      total += next[v];
    }
    // No dangling nodes on validated graphs, so mass is conserved up to
    // rounding; renormalize to pin the sum at 1.
    for (NodeId v = 0; v < n; ++v) result.scores[v] = next[v] / total;
    result.iterations = iter + 1;
    if (change < tolerance) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace gsamp
