// gsamp: generate, sample, and measure graphs from the command line.
//
// Exit codes: 0 success, 2 usage error, 3 input parse/validation error,
// 4 sampling or generation error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsamp/gsamp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitSampling = 4;

std::map<std::string, double> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, double> params;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw gsamp::ArgumentError("--param expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    double parsed = 0.0;
    try {
      parsed = std::stod(value, &used);
    } catch (const std::exception&) {
      throw gsamp::ArgumentError("--param " + key + ": '" + value + "' is not a number");
    }
    if (used != value.size())
      throw gsamp::ArgumentError("--param " + key + ": '" + value + "' is not a number");
    params[key] = parsed;
  }
  return params;
}

std::vector<gsamp::Statistic> parse_stats(const std::string& list) {
  std::vector<gsamp::Statistic> stats;
  std::size_t begin = 0;
  while (begin <= list.size()) {
    const auto end = list.find(',', begin);
    const std::string token = list.substr(begin, end == std::string::npos ? end : end - begin);
    if (token == "transitivity")
      stats.push_back(gsamp::Statistic::transitivity);
    else if (token == "avgdeg")
      stats.push_back(gsamp::Statistic::average_degree);
    else if (token == "degcorr")
      stats.push_back(gsamp::Statistic::degree_correlation);
    else
      throw gsamp::ArgumentError("unknown statistic '" + token +
                                 "' (expected transitivity, avgdeg, degcorr)");
    if (end == std::string::npos) break;
    begin = end + 1;
  }
  return stats;
}

std::string metadata_record(const gsamp::SampleResult& result) {
  std::string line = "method=" + result.method + " seed=" + std::to_string(result.seed);
  for (const auto& [name, value] : result.params) line += " " + name + "=" + gsamp::format_number(value);
  line += " nodes=" + std::to_string(result.nodes_sampled);
  line += " edges=" + std::to_string(result.edges_sampled);
  return line;
}

struct GenerateArgs {
  std::string model = "watts-strogatz";
  std::uint32_t nodes = 0;
  std::uint32_t k = 0;
  double p = 0.0;
  std::uint64_t seed = gsamp::kDefaultSeed;
  std::string output;
};

struct SampleArgs {
  std::string method;
  std::string input;
  std::string output;
  double fraction = 0.0;
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;
  std::uint64_t seed = gsamp::kDefaultSeed;
  std::vector<std::string> params;
};

struct StatsArgs {
  std::string input;
  std::string stats = "transitivity,avgdeg,degcorr";
};

struct EstimateArgs {
  std::string input;
  std::string method;
  double fraction = 0.5;
  std::uint32_t runs = 10;
  std::uint64_t seed = gsamp::kDefaultSeed;
  std::string stats = "transitivity,avgdeg,degcorr";
  std::vector<std::string> params;
};

int run_generate(const GenerateArgs& args) {
  if (args.model != "watts-strogatz")
    throw gsamp::ArgumentError("unknown model '" + args.model + "' (available: watts-strogatz)");
  gsamp::RandomSource rng(args.seed);
  const gsamp::Graph graph = gsamp::generate_watts_strogatz(args.nodes, args.k, args.p, rng);
  gsamp::write_edge_list_file(graph, args.output);
  std::cout << "nodes=" << graph.node_count() << " edges=" << graph.edge_count() << '\n';
  return kExitOk;
}

int run_sample(const SampleArgs& args, bool has_fraction, bool has_nodes, bool has_edges) {
  if (static_cast<int>(has_fraction) + static_cast<int>(has_nodes) + static_cast<int>(has_edges) != 1)
    throw gsamp::ArgumentError("exactly one of --fraction, --nodes, --edges must be given");
  const gsamp::Graph graph = gsamp::load_edge_list_file(args.input);
  const gsamp::SamplerSpec spec(args.method, parse_params(args.params), args.seed);
  const gsamp::TargetSize target = has_fraction ? gsamp::TargetSize::fraction(args.fraction)
                                   : has_nodes  ? gsamp::TargetSize::nodes(args.nodes)
                                                : gsamp::TargetSize::edges(args.edges);
  const gsamp::SampleResult result = gsamp::sample(spec, graph, target);
  gsamp::write_edge_list_file(result.sample, args.output);
  const std::string record = metadata_record(result);
  std::ofstream meta(args.output + ".meta");
  if (!meta) throw gsamp::ArgumentError("cannot open output file: " + args.output + ".meta");
  meta << record << '\n';
  std::cout << record << '\n';
  for (const auto& warning : result.warnings) std::cerr << "warning: " << warning << '\n';
  return kExitOk;
}

int run_stats(const StatsArgs& args) {
  // Statistics are computed on the graph spanned by the file's edges, so
  // sample files with preserved (gappy) source ids measure correctly.
  const gsamp::Graph loaded = gsamp::load_edge_list_file(args.input);
  if (loaded.edge_count() == 0)
    throw gsamp::ValidationError(gsamp::ValidationKind::Empty, "edge list has no edges");
  const auto spanned = gsamp::graph_from_edges(loaded.edges());
  char buf[64];
  for (gsamp::Statistic stat : parse_stats(args.stats)) {
    try {
      const double value = gsamp::compute_statistic(stat, spanned.graph);
      std::snprintf(buf, sizeof(buf), "%.6f", value);
      std::cout << gsamp::statistic_name(stat) << ' ' << buf << '\n';
    } catch (const gsamp::DegenerateStatisticError&) {
      std::cout << gsamp::statistic_name(stat) << " degenerate\n";
    }
  }
  return kExitOk;
}

int run_estimate(const EstimateArgs& args) {
  const gsamp::Graph graph = gsamp::load_edge_list_file(args.input);
  const gsamp::SamplerSpec spec(args.method, parse_params(args.params), args.seed);
  const auto stats = parse_stats(args.stats);
  std::vector<std::string> run_errors;
  const auto reports = gsamp::estimate(graph, spec, gsamp::TargetSize::fraction(args.fraction), args.runs,
                                       stats, &run_errors);
  std::cout << gsamp::format_reports(reports);
  for (const auto& error : run_errors) std::cerr << error << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph sampling toolkit: generation, sampling, statistics, estimation"};
  app.require_subcommand(1);

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "generate a synthetic graph as an edge list");
  gen->add_option("--model", gen_args.model, "generator model")->capture_default_str();
  gen->add_option("--nodes", gen_args.nodes, "number of nodes")->required();
  gen->add_option("--k", gen_args.k, "lattice neighbors per node (even)")->required();
  gen->add_option("--p", gen_args.p, "rewiring probability")->capture_default_str();
  gen->add_option("--seed", gen_args.seed, "random seed")->capture_default_str();
  gen->add_option("--output", gen_args.output, "output edge list path")->required();

  SampleArgs sample_args;
  auto* smp = app.add_subcommand("sample", "sample a subgraph from an edge list");
  smp->add_option("--method", sample_args.method, "sampling method identifier")->required();
  smp->add_option("--input", sample_args.input, "input edge list path")->required();
  auto* f_opt = smp->add_option("--fraction", sample_args.fraction, "fraction of nodes/edges to retain");
  auto* n_opt = smp->add_option("--nodes", sample_args.nodes, "node target");
  auto* e_opt = smp->add_option("--edges", sample_args.edges, "edge target");
  smp->add_option("--seed", sample_args.seed, "random seed")->capture_default_str();
  smp->add_option("--param", sample_args.params, "hyperparameter override key=value (repeatable)");
  smp->add_option("--output", sample_args.output, "output edge list path")->required();

  StatsArgs stats_args;
  auto* sts = app.add_subcommand("stats", "compute descriptive statistics of an edge list");
  sts->add_option("--input", stats_args.input, "input edge list path")->required();
  sts->add_option("--stats", stats_args.stats, "comma list: transitivity,avgdeg,degcorr")
      ->capture_default_str();

  EstimateArgs est_args;
  auto* est = app.add_subcommand("estimate", "estimate statistics from repeated seeded samples");
  est->add_option("--input", est_args.input, "input edge list path")->required();
  est->add_option("--method", est_args.method, "sampling method identifier")->required();
  est->add_option("--fraction", est_args.fraction, "retained fraction")->capture_default_str();
  est->add_option("--runs", est_args.runs, "number of seeded runs")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  est->add_option("--seed", est_args.seed, "base random seed")->capture_default_str();
  est->add_option("--stats", est_args.stats, "comma list: transitivity,avgdeg,degcorr")
      ->capture_default_str();
  est->add_option("--param", est_args.params, "hyperparameter override key=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_generate(gen_args);
    if (smp->parsed())
      return run_sample(sample_args, f_opt->count() > 0, n_opt->count() > 0, e_opt->count() > 0);
    if (sts->parsed()) return run_stats(stats_args);
    if (est->parsed()) return run_estimate(est_args);
    return kExitUsage;
  } catch (const gsamp::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gsamp::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const gsamp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const gsamp::SamplingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSampling;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
