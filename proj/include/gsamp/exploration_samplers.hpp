#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "gsamp/errors.hpp"
#include "gsamp/graph.hpp"
#include "gsamp/random.hpp"
#include "gsamp/traverse.hpp"

namespace gsamp {

// Exploration samplers: traversals, expansions, and random walks. Tree
// samplers (bfs, dfs, lerw) return their collected tree edges; frw returns
// the graph spanned by traversed edges; everything else returns the
// subgraph induced on the sampled node set.
//
// All of them carry the shared stuck-walk guard: guard_factor * n
// consecutive steps without a new sampled node abort the run.

inline constexpr std::uint64_t kStuckGuardFactor = 100;
inline constexpr std::uint64_t kMaxRekindles = 100;

namespace detail {

class StuckGuard {
 public:
  StuckGuard(const Graph& graph, std::uint64_t factor, const char* what)
      : limit_(factor * graph.node_count()), what_(what) {}

  void stalled() {
    if (++stalled_steps_ >= limit_)
      throw SamplingError(std::string(what_) + ": no new node in " + std::to_string(limit_) +
                          " consecutive steps");
  }
  void progressed() noexcept { stalled_steps_ = 0; }

 private:
  std::uint64_t limit_;
  std::uint64_t stalled_steps_ = 0;
  const char* what_;
};

// Tracks the sampled node set with O(1) membership and keeps the count.
class NodeSet {
 public:
  explicit NodeSet(NodeId n) : member_(n, 0) {}

  bool insert(NodeId v) {
    if (member_[v]) return false;
    member_[v] = 1;
    ++count_;
    return true;
  }
  bool contains(NodeId v) const { return member_[v] != 0; }
  std::uint64_t count() const noexcept { return count_; }

  std::set<NodeId> to_set() const {
    std::set<NodeId> out;
    for (NodeId v = 0; v < member_.size(); ++v)
      if (member_[v]) out.insert(out.end(), v);
    return out;
  }

 private:
  std::vector<char> member_;
  std::uint64_t count_ = 0;
};

inline NodeId uniform_node(const Graph& graph, RandomSource& rng) {
  return static_cast<NodeId>(rng.bounded(graph.node_count()));
}

inline NodeId uniform_unsampled_node(const Graph& graph, const NodeSet& sampled, RandomSource& rng) {
  for (;;) {
    const NodeId v = uniform_node(graph, rng);
    if (!sampled.contains(v)) return v;
  }
}

// Shared collector for single-walker samplers: advance with `step`, record
// distinct visited nodes, return the induced subgraph once the target is
// met.
template <typename StepFn>
SampledGraph walk_and_induce(const Graph& graph, std::uint64_t node_target, RandomSource& rng, StepFn step,
                             const char* what, std::uint64_t guard_factor) {
  NodeSet visited(graph.node_count());
  NodeId current = uniform_node(graph, rng);
  visited.insert(current);
  StuckGuard guard(graph, guard_factor, what);
  while (visited.count() < node_target) {
    current = step(current);
    if (visited.insert(current))
      guard.progressed();
    else
      guard.stalled();
  }
  return induced_subgraph(graph, visited.to_set());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Walk step kernels. The samplers below are thin collectors around these;
// stationarity and acceptance tests drive the kernels directly.

inline NodeId metropolis_step(const Graph& graph, NodeId current, double alpha, RandomSource& rng) {
  const NodeId proposal = random_neighbor(graph, current, rng);
  const double ratio =
      std::pow(static_cast<double>(graph.degree(current)) / graph.degree(proposal), alpha);
  return rng.uniform() < ratio ? proposal : current;
}

// Metropolis step that re-proposes among the not-yet-proposed neighbors
// after each rejection; stays only once every neighbor was rejected.
inline NodeId rejection_constrained_step(const Graph& graph, NodeId current, double alpha,
                                         RandomSource& rng) {
  const auto adj = graph.neighbors(current);
  std::vector<NodeId> candidates(adj.begin(), adj.end());
  while (!candidates.empty()) {
    const std::size_t i = static_cast<std::size_t>(rng.bounded(candidates.size()));
    const NodeId proposal = candidates[i];
    const double ratio =
        std::pow(static_cast<double>(graph.degree(current)) / graph.degree(proposal), alpha);
    if (rng.uniform() < ratio) return proposal;
    candidates[i] = candidates.back();
    candidates.pop_back();
  }
  return current;
}

// Uniform step excluding the node the walker just left; a degree-1 node
// must backtrack.
inline NodeId non_backtracking_step(const Graph& graph, NodeId current, std::optional<NodeId> previous,
                                    RandomSource& rng) {
  const auto adj = graph.neighbors(current);
  if (!previous || adj.size() == 1) return adj[rng.bounded(adj.size())];
  const auto it = std::lower_bound(adj.begin(), adj.end(), *previous);
  if (it == adj.end() || *it != *previous) return adj[rng.bounded(adj.size())];
  const auto skip = static_cast<std::size_t>(it - adj.begin());
  const std::uint64_t r = rng.bounded(adj.size() - 1);
  return adj[r < skip ? r : r + 1];
}

// Per-node circular neighbor queues: each queue is shuffled once per
// cycle and popped on every step from its node, so between reshuffles a
// node steps to each of its neighbors exactly once.
class NeighborQueues {
 public:
  explicit NeighborQueues(const Graph& graph) : order_(graph.node_count()), cursor_(graph.node_count(), 0) {}

  NodeId pop(const Graph& graph, NodeId u, RandomSource& rng) {
    auto& queue = order_[u];
    if (queue.empty()) {
      const auto adj = graph.neighbors(u);
      queue.assign(adj.begin(), adj.end());
      rng.shuffle(queue);
    } else if (cursor_[u] == queue.size()) {
      rng.shuffle(queue);
      cursor_[u] = 0;
    }
    return queue[cursor_[u]++];
  }

 private:
  std::vector<std::vector<NodeId>> order_;
  std::vector<std::uint32_t> cursor_;
};

// Step biased toward neighbors with low neighborhood overlap: weight
// 1 - |N(u) ∩ N(w)| / min(deg u, deg w), uniform when all weights vanish.
inline NodeId overlap_biased_step(const Graph& graph, NodeId current, RandomSource& rng) {
  const auto adj = graph.neighbors(current);
  std::vector<double> weights(adj.size());
  double total = 0.0;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    const auto other = graph.neighbors(adj[i]);
    std::size_t overlap = 0;
    std::size_t a = 0, b = 0;
    while (a < adj.size() && b < other.size()) {
      if (adj[a] < other[b])
        ++a;
      else if (adj[a] > other[b])
        ++b;
      else {
        ++overlap;
        ++a;
        ++b;
      }
    }
    const double denom = std::min(graph.degree(current), graph.degree(adj[i]));
    weights[i] = 1.0 - static_cast<double>(overlap) / denom;
    total += weights[i];
  }
  if (!(total > 0.0)) return adj[rng.bounded(adj.size())];
  return adj[weighted_index(weights, rng)];
}

// ---------------------------------------------------------------------------
// Traversal samplers (tree output).

inline SampledGraph sample_bfs_tree_from(const Graph& graph, NodeId start, std::uint64_t node_target,
                                         RandomSource& rng) {
  detail::NodeSet visited(graph.node_count());
  visited.insert(start);
  std::vector<Edge> tree;
  std::deque<NodeId> queue{start};
  while (!queue.empty() && visited.count() < node_target) {
    const NodeId u = queue.front();
    queue.pop_front();
    const auto adj = graph.neighbors(u);
    std::vector<NodeId> expansion(adj.begin(), adj.end());
    rng.shuffle(expansion);
    for (NodeId v : expansion) {
      if (!visited.insert(v)) continue;
      tree.push_back(ordered(u, v));
      queue.push_back(v);
      if (visited.count() == node_target) break;
    }
  }
  return build_sampled(visited.to_set(), tree);
}

inline SampledGraph sample_bfs_tree(const Graph& graph, std::uint64_t node_target, RandomSource& rng) {
  return sample_bfs_tree_from(graph, detail::uniform_node(graph, rng), node_target, rng);
}

inline SampledGraph sample_dfs_tree_from(const Graph& graph, NodeId start, std::uint64_t node_target,
                                         RandomSource& rng) {
  detail::NodeSet visited(graph.node_count());
  std::vector<Edge> tree;
  std::vector<std::pair<NodeId, std::optional<NodeId>>> stack{{start, std::nullopt}};
  while (!stack.empty() && visited.count() < node_target) {
    const auto [u, parent] = stack.back();
    stack.pop_back();
    if (!visited.insert(u)) continue;
    if (parent) tree.push_back(ordered(*parent, u));
    if (visited.count() == node_target) break;
    const auto adj = graph.neighbors(u);
    std::vector<NodeId> expansion(adj.begin(), adj.end());
    rng.shuffle(expansion);
    for (NodeId v : expansion)
      if (!visited.contains(v)) stack.emplace_back(v, u);
  }
  return build_sampled(visited.to_set(), tree);
}

inline SampledGraph sample_dfs_tree(const Graph& graph, std::uint64_t node_target, RandomSource& rng) {
  return sample_dfs_tree_from(graph, detail::uniform_node(graph, rng), node_target, rng);
}

// ---------------------------------------------------------------------------
// Expansion samplers (induced output).

// Snowball: BFS that expands at most `max_neighbors` uniformly chosen
// unvisited neighbors per dequeued node. A dead frontier rekindles at a
// fresh uniform unvisited node, at most kMaxRekindles times.
inline SampledGraph sample_snowball_from(const Graph& graph, NodeId start, std::uint64_t node_target,
                                         std::uint64_t max_neighbors, RandomSource& rng,
                                         std::uint64_t max_rekindles = kMaxRekindles) {
  detail::NodeSet sampled(graph.node_count());
  sampled.insert(start);
  std::deque<NodeId> queue{start};
  std::uint64_t rekindles = 0;
  while (sampled.count() < node_target) {
    if (queue.empty()) {
      if (++rekindles > max_rekindles)
        throw SamplingError("snowball: frontier died more than " + std::to_string(max_rekindles) +
                            " times");
      const NodeId fresh = detail::uniform_unsampled_node(graph, sampled, rng);
      sampled.insert(fresh);
      queue.push_back(fresh);
      continue;
    }
    const NodeId u = queue.front();
    queue.pop_front();
    std::vector<NodeId> unvisited;
    for (NodeId v : graph.neighbors(u))
      if (!sampled.contains(v)) unvisited.push_back(v);
    std::uint64_t take = std::min<std::uint64_t>(max_neighbors, unvisited.size());
    rng.partial_shuffle(unvisited, take);
    for (std::uint64_t i = 0; i < take && sampled.count() < node_target; ++i) {
      sampled.insert(unvisited[i]);
      queue.push_back(unvisited[i]);
    }
  }
  return induced_subgraph(graph, sampled.to_set());
}

inline SampledGraph sample_snowball(const Graph& graph, std::uint64_t node_target,
                                    std::uint64_t max_neighbors, RandomSource& rng) {
  return sample_snowball_from(graph, detail::uniform_node(graph, rng), node_target, max_neighbors, rng);
}

// Forest fire: snowball whose per-node expansion count is geometric with
// continue-probability p (mean p/(1-p)), so the neighbor cap holds only in
// expectation. p = 1 burns every unvisited neighbor.
inline SampledGraph sample_forest_fire_from(const Graph& graph, NodeId start, std::uint64_t node_target,
                                            double burn_p, RandomSource& rng,
                                            std::uint64_t max_rekindles = kMaxRekindles) {
  detail::NodeSet sampled(graph.node_count());
  sampled.insert(start);
  std::deque<NodeId> queue{start};
  std::uint64_t rekindles = 0;
  while (sampled.count() < node_target) {
    if (queue.empty()) {
      if (++rekindles > max_rekindles)
        throw SamplingError("forest fire: died more than " + std::to_string(max_rekindles) + " times");
      const NodeId fresh = detail::uniform_unsampled_node(graph, sampled, rng);
      sampled.insert(fresh);
      queue.push_back(fresh);
      continue;
    }
    const NodeId u = queue.front();
    queue.pop_front();
    std::vector<NodeId> unvisited;
    for (NodeId v : graph.neighbors(u))
      if (!sampled.contains(v)) unvisited.push_back(v);
    std::uint64_t burn = unvisited.size();
    if (burn_p < 1.0) burn = std::min<std::uint64_t>(rng.geometric(burn_p), burn);
    rng.partial_shuffle(unvisited, burn);
    for (std::uint64_t i = 0; i < burn && sampled.count() < node_target; ++i) {
      sampled.insert(unvisited[i]);
      queue.push_back(unvisited[i]);
    }
  }
  return induced_subgraph(graph, sampled.to_set());
}

inline SampledGraph sample_forest_fire(const Graph& graph, std::uint64_t node_target, double burn_p,
                                       RandomSource& rng, std::uint64_t max_rekindles = kMaxRekindles) {
  return sample_forest_fire_from(graph, detail::uniform_node(graph, rng), node_target, burn_p, rng,
                                 max_rekindles);
}

// Community structure expansion: greedily add the candidate neighbor that
// reaches the most nodes outside the known set (sampled plus neighbors),
// ties broken uniformly.
inline SampledGraph sample_community_expansion_from(const Graph& graph, NodeId start,
                                                    std::uint64_t node_target, RandomSource& rng) {
  detail::NodeSet sampled(graph.node_count());
  std::vector<char> known(graph.node_count(), 0);
  std::set<NodeId> candidates;
  auto absorb = [&](NodeId v) {
    sampled.insert(v);
    known[v] = 1;
    candidates.erase(v);
    for (NodeId w : graph.neighbors(v)) {
      known[w] = 1;
      if (!sampled.contains(w)) candidates.insert(w);
    }
  };
  absorb(start);
  std::vector<NodeId> best;
  while (sampled.count() < node_target) {
    best.clear();
    std::int64_t best_score = -1;
    for (NodeId c : candidates) {
      std::int64_t score = 0;
      for (NodeId w : graph.neighbors(c)) score += known[w] == 0;
      if (score > best_score) {
        best_score = score;
        best.assign(1, c);
      } else if (score == best_score) {
        best.push_back(c);
      }
    }
    absorb(best.size() == 1 ? best[0] : best[rng.bounded(best.size())]);
  }
  return induced_subgraph(graph, sampled.to_set());
}

inline SampledGraph sample_community_expansion(const Graph& graph, std::uint64_t node_target,
                                               RandomSource& rng) {
  return sample_community_expansion_from(graph, detail::uniform_node(graph, rng), node_target, rng);
}

// Random node-neighbor: keep absorbing a uniform unsampled node together
// with its whole one-hop neighborhood; overshoot is retained.
inline SampledGraph sample_node_neighborhood_from(const Graph& graph, NodeId first_pick,
                                                  std::uint64_t node_target, RandomSource& rng) {
  detail::NodeSet sampled(graph.node_count());
  NodeId pick = first_pick;
  for (;;) {
    sampled.insert(pick);
    for (NodeId w : graph.neighbors(pick)) sampled.insert(w);
    if (sampled.count() >= node_target) break;
    pick = detail::uniform_unsampled_node(graph, sampled, rng);
  }
  return induced_subgraph(graph, sampled.to_set());
}

inline SampledGraph sample_node_neighborhood(const Graph& graph, std::uint64_t node_target,
                                             RandomSource& rng) {
  return sample_node_neighborhood_from(graph, detail::uniform_node(graph, rng), node_target, rng);
}

// Shortest-path sampler: accumulate the nodes of geodesics between
// uniformly drawn distinct pairs; overshoot is retained. Output may be
// disconnected.
inline SampledGraph sample_shortest_paths(const Graph& graph, std::uint64_t node_target, RandomSource& rng) {
  detail::NodeSet sampled(graph.node_count());
  while (sampled.count() < node_target) {
    const NodeId u = detail::uniform_node(graph, rng);
    NodeId v = u;
    while (v == u) v = detail::uniform_node(graph, rng);
    for (NodeId w : shortest_path(graph, u, v, rng)) sampled.insert(w);
  }
  return induced_subgraph(graph, sampled.to_set());
}

// ---------------------------------------------------------------------------
// Walk samplers (induced output unless stated otherwise).

inline SampledGraph sample_random_walk(const Graph& graph, std::uint64_t node_target, RandomSource& rng,
                                       std::uint64_t guard_factor = kStuckGuardFactor) {
  return detail::walk_and_induce(
      graph, node_target, rng, [&](NodeId cur) { return random_neighbor(graph, cur, rng); }, "random walk",
      guard_factor);
}

// Random walk with restart: each step teleports back to the original seed
// with probability p_restart.
inline SampledGraph sample_random_walk_restart(const Graph& graph, std::uint64_t node_target,
                                               double p_restart, RandomSource& rng,
                                               std::uint64_t guard_factor = kStuckGuardFactor) {
  std::optional<NodeId> seed_node;
  return detail::walk_and_induce(
      graph, node_target, rng,
      [&](NodeId cur) {
        if (!seed_node) seed_node = cur;  // first current node is the seed
        if (rng.uniform() < p_restart) return *seed_node;
        return random_neighbor(graph, cur, rng);
      },
      "random walk with restart", guard_factor);
}

// Random walk with jump: each step teleports to a uniform node with
// probability p_jump. Output may be disconnected.
inline SampledGraph sample_random_walk_jump(const Graph& graph, std::uint64_t node_target, double p_jump,
                                            RandomSource& rng,
                                            std::uint64_t guard_factor = kStuckGuardFactor) {
  return detail::walk_and_induce(
      graph, node_target, rng,
      [&](NodeId cur) {
        if (rng.uniform() < p_jump) return detail::uniform_node(graph, rng);
        return random_neighbor(graph, cur, rng);
      },
      "random walk with jump", guard_factor);
}

inline SampledGraph sample_metropolis_hastings_walk(const Graph& graph, std::uint64_t node_target,
                                                    double alpha, RandomSource& rng,
                                                    std::uint64_t guard_factor = kStuckGuardFactor) {
  return detail::walk_and_induce(
      graph, node_target, rng, [&](NodeId cur) { return metropolis_step(graph, cur, alpha, rng); },
      "metropolis-hastings walk", guard_factor);
}

inline SampledGraph sample_rejection_constrained_walk(const Graph& graph, std::uint64_t node_target,
                                                      double alpha, RandomSource& rng,
                                                      std::uint64_t guard_factor = kStuckGuardFactor) {
  return detail::walk_and_induce(
      graph, node_target, rng,
      [&](NodeId cur) { return rejection_constrained_step(graph, cur, alpha, rng); },
      "rejection-constrained walk", guard_factor);
}

inline SampledGraph sample_non_backtracking_walk(const Graph& graph, std::uint64_t node_target,
                                                 RandomSource& rng,
                                                 std::uint64_t guard_factor = kStuckGuardFactor) {
  std::optional<NodeId> previous;
  return detail::walk_and_induce(
      graph, node_target, rng,
      [&](NodeId cur) {
        const NodeId next = non_backtracking_step(graph, cur, previous, rng);
        previous = cur;
        return next;
      },
      "non-backtracking walk", guard_factor);
}

inline SampledGraph sample_circulating_neighbor_walk(const Graph& graph, std::uint64_t node_target,
                                                     RandomSource& rng,
                                                     std::uint64_t guard_factor = kStuckGuardFactor) {
  NeighborQueues queues(graph);
  return detail::walk_and_induce(
      graph, node_target, rng, [&](NodeId cur) { return queues.pop(graph, cur, rng); },
      "circulating-neighbor walk", guard_factor);
}

inline SampledGraph sample_common_neighbor_aware_walk(const Graph& graph, std::uint64_t node_target,
                                                      RandomSource& rng,
                                                      std::uint64_t guard_factor = kStuckGuardFactor) {
  return detail::walk_and_induce(
      graph, node_target, rng, [&](NodeId cur) { return overlap_biased_step(graph, cur, rng); },
      "common-neighbor-aware walk", guard_factor);
}

// Frontier of random walkers: walkers start at distinct uniform nodes; each
// step advances one walker chosen proportionally to its current degree and
// records the traversed edge. Nodes touched by recorded edges count toward
// the target; the output is the graph spanned by the recorded edges.
inline SampledGraph sample_frontier_walkers(const Graph& graph, std::uint64_t node_target,
                                            std::uint64_t walker_count, RandomSource& rng,
                                            std::uint64_t guard_factor = kStuckGuardFactor) {
  if (walker_count > graph.node_count())
    throw ArgumentError("frontier walkers: walker count exceeds node count");
  std::vector<NodeId> pool(graph.node_count());
  std::iota(pool.begin(), pool.end(), 0);
  rng.partial_shuffle(pool, walker_count);
  std::vector<NodeId> positions(pool.begin(), pool.begin() + walker_count);
  detail::NodeSet touched(graph.node_count());
  std::set<Edge> recorded;
  detail::StuckGuard guard(graph, guard_factor, "frontier walkers");
  std::vector<double> weights(walker_count);
  while (touched.count() < node_target) {
    for (std::size_t i = 0; i < positions.size(); ++i) weights[i] = graph.degree(positions[i]);
    const std::size_t i = weighted_index(weights, rng);
    const NodeId u = positions[i];
    const NodeId v = random_neighbor(graph, u, rng);
    positions[i] = v;
    recorded.insert(ordered(u, v));
    const bool new_u = touched.insert(u);
    const bool new_v = touched.insert(v);
    if (new_u || new_v)
      guard.progressed();
    else
      guard.stalled();
  }
  std::vector<Edge> edges(recorded.begin(), recorded.end());
  return graph_from_edges(edges);
}

// Loop-erased random walk (Wilson's algorithm): from a uniform root, each
// unattached node in turn walks until it hits the attached set, the walk's
// loops are erased by keeping only the last exit taken from every node, and
// the surviving path is spliced tree-end first so the sampler can stop
// exactly at the node target. With node_target = n the result is a
// uniformly distributed spanning tree.
inline SampledGraph sample_loop_erased_tree(const Graph& graph, std::uint64_t node_target,
                                            RandomSource& rng,
                                            std::uint64_t guard_factor = kStuckGuardFactor) {
  const NodeId n = graph.node_count();
  std::vector<char> attached(n, 0);
  const NodeId root = detail::uniform_node(graph, rng);
  attached[root] = 1;
  std::uint64_t attached_count = 1;
  std::vector<Edge> tree;
  std::vector<NodeId> last_exit(n, 0);
  detail::StuckGuard guard(graph, guard_factor, "loop-erased walk");
  for (NodeId u = 0; u < n && attached_count < node_target; ++u) {
    if (attached[u]) continue;
    NodeId pos = u;
    while (!attached[pos]) {
      const NodeId next = random_neighbor(graph, pos, rng);
      last_exit[pos] = next;
      pos = next;
      guard.stalled();
    }
    std::vector<NodeId> path{u};
    while (!attached[path.back()]) path.push_back(last_exit[path.back()]);
    for (std::size_t i = path.size() - 1; i-- > 0 && attached_count < node_target;) {
      attached[path[i]] = 1;
      ++attached_count;
      tree.push_back(ordered(path[i], path[i + 1]));
      guard.progressed();
    }
  }
  std::set<NodeId> nodes;
  for (NodeId v = 0; v < n; ++v)
    if (attached[v]) nodes.insert(nodes.end(), v);
  return build_sampled(nodes, tree);
}

}  // namespace gsamp
