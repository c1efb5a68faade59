#include <doctest.h>

#include <cmath>
#include <vector>

#include "gsamp/generate.hpp"
#include "gsamp/statistics.hpp"
#include "support/oracles.hpp"

using gsamp::Statistic;
using gsamp::TargetSize;

TEST_CASE("transitivity") {
  CHECK(gsamp::transitivity(oracle::complete_graph(3)) == doctest::Approx(1.0));
  CHECK(gsamp::transitivity(oracle::path_graph(4)) == 0.0);
  CHECK(gsamp::transitivity(oracle::path_graph(2)) == 0.0);  // no triples at all

  SUBCASE("ring lattice closed form 3(k-2)/(4(k-1))") {
    gsamp::RandomSource rng(1);
    const auto ws = gsamp::generate_watts_strogatz(1000, 10, 0.0, rng);
    CHECK(std::fabs(gsamp::transitivity(ws) - 2.0 / 3.0) < 1e-12);
    // cross-check the closed form against the brute-force count at a size
    // where O(n^3) is still comfortable
    const auto small = gsamp::generate_watts_strogatz(100, 10, 0.0, rng);
    CHECK(gsamp::transitivity(small) == doctest::Approx(oracle::brute_transitivity(small)).epsilon(1e-12));
    CHECK(std::fabs(oracle::brute_transitivity(small) - 2.0 / 3.0) < 1e-12);
  }
  SUBCASE("matches the brute-force triple count on random graphs") {
    gsamp::RandomSource rng(2);
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = oracle::random_connected_graph(
          3 + static_cast<gsamp::NodeId>(rng.bounded(48)), static_cast<std::uint32_t>(rng.bounded(80)),
          rng);
      CHECK(gsamp::transitivity(g) == doctest::Approx(oracle::brute_transitivity(g)).epsilon(1e-14));
    }
  }
}

TEST_CASE("average degree") {
  CHECK(gsamp::average_degree(oracle::cycle_graph(4)) == 2.0);
  CHECK(gsamp::average_degree(oracle::star_graph(4)) == doctest::Approx(1.6));
  gsamp::RandomSource rng(3);
  CHECK(gsamp::average_degree(gsamp::generate_watts_strogatz(1000, 10, 0.0, rng)) == 10.0);
}

TEST_CASE("degree correlation") {
  CHECK(gsamp::degree_correlation(oracle::star_graph(4)) == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(gsamp::degree_correlation(oracle::path_graph(4)) == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK_THROWS_AS(gsamp::degree_correlation(oracle::cycle_graph(4)), gsamp::DegenerateStatisticError);
  CHECK_THROWS_AS(gsamp::degree_correlation(oracle::complete_graph(5)),
                  gsamp::DegenerateStatisticError);

  SUBCASE("matches the naive two-pass pearson oracle") {
    gsamp::RandomSource rng(4);
    int checked = 0;
    while (checked < 15) {
      const auto g = oracle::random_connected_graph(
          4 + static_cast<gsamp::NodeId>(rng.bounded(30)), static_cast<std::uint32_t>(rng.bounded(50)),
          rng);
      try {
        const double got = gsamp::degree_correlation(g);
        CHECK(got == doctest::Approx(oracle::brute_degree_correlation(g)).epsilon(1e-10));
        ++checked;
      } catch (const gsamp::DegenerateStatisticError&) {
        // regular draw; skip
      }
    }
  }
}

TEST_CASE("estimate harness") {
  gsamp::RandomSource gen(5);
  const auto ws = gsamp::generate_watts_strogatz(200, 6, 0.1, gen);
  const gsamp::SamplerSpec spec("rn", {}, 42);
  const std::vector<Statistic> all{Statistic::transitivity, Statistic::average_degree,
                                   Statistic::degree_correlation};

  SUBCASE("per-run samples are bit-identical to direct laddered calls") {
    const auto reports = gsamp::estimate(ws, spec, TargetSize::fraction(0.5), 5, all);
    for (std::uint32_t run = 0; run < 5; ++run) {
      const gsamp::SamplerSpec ladder("rn", {}, 42 + run);
      const auto direct = gsamp::sample(ladder, ws, TargetSize::fraction(0.5));
      CHECK(*reports[0].estimates[run] ==
            doctest::Approx(gsamp::transitivity(direct.sample.graph)).epsilon(1e-15));
      CHECK(*reports[1].estimates[run] ==
            doctest::Approx(gsamp::average_degree(direct.sample.graph)).epsilon(1e-15));
    }
  }
  SUBCASE("single run has zero standard error") {
    const auto reports = gsamp::estimate(ws, spec, TargetSize::fraction(0.5), 1, all);
    for (const auto& r : reports) {
      CHECK(r.std_error == 0.0);
      CHECK(r.runs_requested == 1);
    }
  }
  SUBCASE("ground truth comes from the full graph") {
    const auto reports = gsamp::estimate(ws, spec, TargetSize::fraction(0.5), 2, all);
    CHECK(*reports[1].ground_truth == 6.0);
    CHECK(*reports[0].ground_truth == doctest::Approx(gsamp::transitivity(ws)));
  }
  SUBCASE("mean and standard error match a hand recomputation") {
    const auto reports = gsamp::estimate(ws, spec, TargetSize::fraction(0.5), 8, all);
    for (const auto& r : reports) {
      double sum = 0.0;
      std::uint32_t used = 0;
      for (const auto& e : r.estimates)
        if (e) {
          sum += *e;
          ++used;
        }
      REQUIRE(used == r.runs_used);
      if (used == 0) continue;
      const double mean = sum / used;
      CHECK(r.mean == doctest::Approx(mean).epsilon(1e-12));
      if (used > 1) {
        double ss = 0.0;
        for (const auto& e : r.estimates)
          if (e) ss += (*e - mean) * (*e - mean);
        CHECK(r.std_error == doctest::Approx(std::sqrt(ss / (used - 1)) / std::sqrt(used)).epsilon(1e-12));
      }
    }
  }
  SUBCASE("the whole harness call is deterministic") {
    const auto a = gsamp::estimate(ws, spec, TargetSize::fraction(0.5), 6, all);
    const auto b = gsamp::estimate(ws, spec, TargetSize::fraction(0.5), 6, all);
    CHECK(gsamp::format_reports(a) == gsamp::format_reports(b));
  }
  SUBCASE("degenerate runs are excluded and counted") {
    // rn with target 2 on a cycle gives samples whose endpoint degrees
    // never vary: every run is degenerate for degree correlation.
    const auto c6 = oracle::cycle_graph(6);
    const std::vector<Statistic> dc{Statistic::degree_correlation};
    const auto reports = gsamp::estimate(c6, gsamp::SamplerSpec("rn"), TargetSize::nodes(2), 4, dc);
    CHECK(reports[0].runs_used == 0);
    CHECK_FALSE(reports[0].ground_truth.has_value());
    CHECK(reports[0].estimates.size() == 4);
    CHECK(gsamp::format_reports(reports).find("ground_truth=degenerate") != std::string::npos);
  }
  SUBCASE("zero runs are rejected") {
    CHECK_THROWS_AS(gsamp::estimate(ws, spec, TargetSize::fraction(0.5), 0, all), gsamp::ArgumentError);
  }
  SUBCASE("all sampling runs failing is a harness error") {
    // rwr pinned to its seed by a 0.99 restart probability cannot cover
    // half of a bare cycle; every run trips the stuck guard.
    const auto c30 = oracle::cycle_graph(30);
    const gsamp::SamplerSpec stuck("rwr", {{"p_restart", 0.99}});
    std::vector<std::string> errors;
    CHECK_THROWS_AS(gsamp::estimate(c30, stuck, TargetSize::fraction(0.5), 3, all, &errors),
                    gsamp::SamplingError);
    CHECK(errors.size() == 3);
  }
}

TEST_CASE("report serialization is stable") {
  gsamp::StatReport r;
  r.statistic = Statistic::average_degree;
  r.ground_truth = 10.0;
  r.mean = 5.25;
  r.std_error = 0.125;
  r.runs_requested = 10;
  r.runs_used = 9;
  std::ostringstream out;
  gsamp::write_report(r, out);
  CHECK(out.str() == "stat=average_degree ground_truth=10 mean=5.25 std_error=0.125 runs_used=9/10\n");
}
