#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "gsamp/errors.hpp"
#include "gsamp/format.hpp"
#include "gsamp/graph.hpp"
#include "gsamp/sample.hpp"
#include "gsamp/sampler_spec.hpp"

namespace gsamp {

enum class Statistic { transitivity, average_degree, degree_correlation };

inline const char* statistic_name(Statistic s) {
  switch (s) {
    case Statistic::transitivity: return "transitivity";
    case Statistic::average_degree: return "average_degree";
    case Statistic::degree_correlation: return "degree_correlation";
  }
  return "unknown";
}

// 3 * triangles / connected triples. Triangles are counted once per edge
// via sorted-adjacency intersection above the edge's upper endpoint;
// triple count is sum of deg-choose-2. Zero triples gives 0.
inline double transitivity(const Graph& graph) {
  std::uint64_t triangles = 0;
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    const auto adj_u = graph.neighbors(u);
    for (NodeId v : adj_u) {
      if (v <= u) continue;
      const auto adj_v = graph.neighbors(v);
      std::size_t a = 0, b = 0;
      while (a < adj_u.size() && b < adj_v.size()) {
        if (adj_u[a] < adj_v[b])
          ++a;
        else if (adj_u[a] > adj_v[b])
          ++b;
        else {
          triangles += adj_u[a] > v;  // count each triangle at its least edge
          ++a;
          ++b;
        }
      }
    }
  }
  std::uint64_t triples = 0;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    const std::uint64_t d = graph.degree(v);
    triples += d * (d - 1) / 2;
  }
  if (triples == 0) return 0.0;
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
}

inline double average_degree(const Graph& graph) {
  if (graph.node_count() == 0) throw ArgumentError("average_degree: empty graph");
  return 2.0 * static_cast<double>(graph.edge_count()) / static_cast<double>(graph.node_count());
}

// Newman degree assortativity: Pearson correlation of endpoint degrees
// over the edge set with each edge counted in both orientations. Undefined
// (and reported as such) when every edge endpoint has the same degree.
inline double degree_correlation(const Graph& graph) {
  if (graph.edge_count() == 0)
    throw DegenerateStatisticError("degree correlation undefined: graph has no edges");
  NodeId min_deg = 0, max_deg = 0;
  bool first = true;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    const NodeId d = graph.degree(v);
    if (d == 0) continue;
    if (first) {
      min_deg = max_deg = d;
      first = false;
    } else {
      min_deg = std::min(min_deg, d);
      max_deg = std::max(max_deg, d);
    }
  }
  if (min_deg == max_deg)
    throw DegenerateStatisticError("degree correlation undefined: endpoint degrees have zero variance");
  double sum_x = 0.0, sum_xx = 0.0, sum_xy = 0.0;
  const double m2 = 2.0 * static_cast<double>(graph.edge_count());
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    const double du = graph.degree(u);
    for (NodeId v : graph.neighbors(u)) {
      const double dv = graph.degree(v);
      sum_x += du;
      sum_xx += du * du;
      sum_xy += du * dv;
    }
  }
  const double mean = sum_x / m2;
  const double cov = sum_xy / m2 - mean * mean;
  const double var = sum_xx / m2 - mean * mean;
  return cov / var;
}

inline double compute_statistic(Statistic stat, const Graph& graph) {
  switch (stat) {
    case Statistic::transitivity: return transitivity(graph);
    case Statistic::average_degree: return average_degree(graph);
    case Statistic::degree_correlation: return degree_correlation(graph);
  }
  throw ArgumentError("unknown statistic");
}

// Per-statistic summary of an estimation experiment. Estimates hold one
// entry per run; degenerate or failed runs are missing and excluded from
// the mean and standard error.
struct StatReport {
  Statistic statistic = Statistic::transitivity;
  std::optional<double> ground_truth;  // empty when degenerate on the full graph
  std::vector<std::optional<double>> estimates;
  double mean = 0.0;
  double std_error = 0.0;
  std::uint32_t runs_requested = 0;
  std::uint32_t runs_used = 0;
};

// Runs the sampler `runs` times with laddered seeds (seed, seed+1, ...),
// evaluating each requested statistic on every sampled graph against the
// ground truth from the full graph. A failed run is excluded from every
// statistic; if all runs fail the harness itself fails.
inline std::vector<StatReport> estimate(const Graph& graph, const SamplerSpec& spec,
                                        const TargetSize& target, std::uint32_t runs,
                                        std::span<const Statistic> statistics,
                                        std::vector<std::string>* run_errors = nullptr) {
  if (runs < 1) throw ArgumentError("estimate: runs must be >= 1");
  std::vector<StatReport> reports;
  for (Statistic stat : statistics) {
    StatReport r;
    r.statistic = stat;
    r.runs_requested = runs;
    try {
      r.ground_truth = compute_statistic(stat, graph);
    } catch (const DegenerateStatisticError&) {
      r.ground_truth.reset();
    }
    reports.push_back(std::move(r));
  }
  std::uint32_t failed_runs = 0;
  for (std::uint32_t run = 0; run < runs; ++run) {
    const SamplerSpec run_spec(spec.method_id(), spec.params(), spec.seed() + run);
    std::optional<SampleResult> result;
    try {
      result = sample(run_spec, graph, target);
    } catch (const SamplingError& e) {
      ++failed_runs;
      if (run_errors != nullptr)
        run_errors->push_back("run " + std::to_string(run) + " (seed " +
                              std::to_string(run_spec.seed()) + ") failed: " + e.what());
    }
    for (auto& report : reports) {
      if (!result) {
        report.estimates.emplace_back(std::nullopt);
        continue;
      }
      try {
        report.estimates.emplace_back(compute_statistic(report.statistic, result->sample.graph));
      } catch (const DegenerateStatisticError&) {
        report.estimates.emplace_back(std::nullopt);
      }
    }
  }
  if (failed_runs == runs) throw SamplingError("estimate: all " + std::to_string(runs) + " runs failed");
  for (auto& report : reports) {
    double sum = 0.0;
    std::uint32_t used = 0;
    for (const auto& e : report.estimates)
      if (e) {
        sum += *e;
        ++used;
      }
    report.runs_used = used;
    report.mean = used > 0 ? sum / used : 0.0;
    if (used > 1) {
      double ss = 0.0;
      for (const auto& e : report.estimates)
        if (e) ss += (*e - report.mean) * (*e - report.mean);
      const double sample_sd = std::sqrt(ss / (used - 1));
      report.std_error = sample_sd / std::sqrt(static_cast<double>(used));
    } else {
      report.std_error = 0.0;
    }
  }
  return reports;
}

// One record per line, machine-readable and byte-stable.
inline void write_report(const StatReport& report, std::ostream& out) {
  out << "stat=" << statistic_name(report.statistic)
      << " ground_truth=" << (report.ground_truth ? format_number(*report.ground_truth) : "degenerate")
      << " mean=" << format_number(report.mean) << " std_error=" << format_number(report.std_error)
      << " runs_used=" << report.runs_used << "/" << report.runs_requested << '\n';
}

inline std::string format_reports(std::span<const StatReport> reports) {
  std::ostringstream out;
  for (const auto& r : reports) write_report(r, out);
  return out.str();
}

}  // namespace gsamp
