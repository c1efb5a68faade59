#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "gsamp/errors.hpp"
#include "gsamp/graph.hpp"
#include "gsamp/random.hpp"
#include "gsamp/traverse.hpp"

namespace gsamp {

// Watts-Strogatz small-world graph: a ring lattice where node i links to
// its k/2 nearest neighbors on each side, then the far endpoint of every
// lattice edge is rewired with probability p to a uniform target that
// creates neither a self-loop nor a parallel edge. Edge count is n*k/2 by
// construction. Disconnected draws are regenerated from the continued
// random stream, up to 100 attempts.
inline Graph generate_watts_strogatz(NodeId n, NodeId k, double p, RandomSource& rng) {
  if (k < 2 || k % 2 != 0) throw ArgumentError("watts-strogatz: k must be even and >= 2");
  if (n <= k) throw ArgumentError("watts-strogatz: need n > k");
  if (p < 0.0 || p > 1.0) throw ArgumentError("watts-strogatz: p must lie in [0, 1]");

  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (k / 2));
    std::vector<std::unordered_set<NodeId>> adjacent(n);
    auto add = [&](NodeId a, NodeId b) {
      adjacent[a].insert(b);
      adjacent[b].insert(a);
    };
    for (NodeId j = 1; j <= k / 2; ++j)
      for (NodeId i = 0; i < n; ++i) {
        const NodeId target = (i + j) % n;
        edges.emplace_back(i, target);
        add(i, target);
      }
    if (p > 0.0) {
      for (auto& [u, v] : edges) {
        if (!rng.bernoulli(p)) continue;
        if (adjacent[u].size() >= static_cast<std::size_t>(n) - 1) continue;  // saturated, nothing to rewire to
        NodeId t;
        do {
          t = static_cast<NodeId>(rng.bounded(n));
        } while (t == u || adjacent[u].count(t) != 0);
        adjacent[u].erase(v);
        adjacent[v].erase(u);
        add(u, t);
        v = t;
      }
    }
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (const auto& [u, v] : edges) normalized.push_back(ordered(u, v));
    Graph graph = Graph::from_edges(n, normalized);
    if (is_connected(graph)) return graph;
  }
  throw SamplingError("watts-strogatz: no connected graph within 100 attempts (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ", p=" + std::to_string(p) + ")");
}

}  // namespace gsamp
