#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "eszlab/experiment.hpp"

using namespace eszlab;
using namespace eszlab::experiment;

namespace {

// CSV line with the elapsed_ms column removed.
std::string strip_elapsed(const std::string& csv) {
  std::stringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    const auto last = line.rfind(',');
    out += line.substr(0, last);
    out += "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("exponent fit recovers synthetic power laws") {
  // counts chosen so n^e is exactly integral; the slope must come back to
  // within 1e-6
  struct Synthetic {
    double e;
    std::vector<std::pair<long, long>> data;  // (n, n^e)
  };
  const std::vector<Synthetic> cases = {
      {1.5, {{4, 8}, {16, 64}, {64, 512}, {256, 4096}}},
      {0.6, {{32, 8}, {243, 27}, {1024, 64}, {3125, 125}}},
      {2.0, {{4, 16}, {16, 256}, {64, 4096}}},
      {1.0, {{3, 3}, {9, 9}, {27, 27}}},
  };
  for (const auto& c : cases) {
    std::vector<GrowthRow> rows;
    for (const auto& [n, count] : c.data) {
      GrowthRow r;
      r.n = n;
      r.count = BigInt(count);
      rows.push_back(r);
    }
    const auto fit = fit_exponent(rows);
    REQUIRE(fit.has_value());
    CHECK(std::abs(*fit - c.e) < 1e-6);
  }

  // rounded data still lands near the exponent
  std::vector<GrowthRow> rounded;
  for (long n : {10L, 20L, 40L, 80L, 160L}) {
    GrowthRow r;
    r.n = n;
    r.count = BigInt(static_cast<long>(std::llround(std::pow(static_cast<double>(n), 1.7))));
    rounded.push_back(r);
  }
  CHECK(*fit_exponent(rounded) == doctest::Approx(1.7).epsilon(1e-2));

  CHECK(!fit_exponent({}).has_value());
  GrowthRow single;
  single.n = 10;
  single.count = BigInt(5);
  CHECK(!fit_exponent({single}).has_value());
}

TEST_CASE("set generation is deterministic and respects the range") {
  SplitMix64 a(42), b(42);
  const auto s1 = generate_set(a, 20, -10, 10, 2);
  const auto s2 = generate_set(b, 20, -10, 10, 2);
  CHECK(s1 == s2);

  SplitMix64 c(43);
  CHECK(generate_set(c, 20, -10, 10, 2) != s1);

  SplitMix64 d(1);
  CHECK_THROWS_AS(generate_set(d, 30, 0, 9, 1), Error);
  try {
    SplitMix64 e(1);
    generate_set(e, 30, 0, 9, 1);
  } catch (const Error& err) {
    CHECK(err.code() == errc::range_too_small);
  }

  SplitMix64 f(7);
  const auto vals = generate_set(f, 21, 0, 20, 1);
  CHECK(vals.size() == 21);  // exactly the full range, all distinct
}

TEST_CASE("construction experiment grows like the three-halves power") {
  ExperimentConfig cfg;
  cfg.task = Task::construction;
  cfg.sizes = {16, 36, 64, 100};
  cfg.seed = 5;
  std::ostringstream csv;
  const auto report = run_experiment(cfg, &csv);
  REQUIRE(report.rows.size() == 4);
  REQUIRE(report.fitted_exponent.has_value());
  CHECK(*report.fitted_exponent > 1.3);
  CHECK(*report.fitted_exponent < 1.7);
  CHECK(csv.str().rfind("N,count,elapsed_ms", 0) == 0);
}

TEST_CASE("experiment output is deterministic modulo elapsed_ms") {
  ExperimentConfig cfg;
  cfg.task = Task::count;
  cfg.poly = "(x-y)^2 + x - z";
  cfg.sizes = {6, 10, 14};
  cfg.seed = 99;
  cfg.range_lo = -30;
  cfg.range_hi = 30;
  std::ostringstream csv1, csv2;
  const auto r1 = run_experiment(cfg, &csv1);
  const auto r2 = run_experiment(cfg, &csv2);
  CHECK(strip_elapsed(csv1.str()) == strip_elapsed(csv2.str()));
  REQUIRE(r1.rows.size() == r2.rows.size());
  for (std::size_t i = 0; i < r1.rows.size(); ++i) CHECK(r1.rows[i].count == r2.rows[i].count);

  ExperimentConfig other = cfg;
  other.seed = 100;
  std::ostringstream csv3;
  run_experiment(other, &csv3);
  CHECK(strip_elapsed(csv1.str()) != strip_elapsed(csv3.str()));
}

TEST_CASE("sizes must increase") {
  ExperimentConfig cfg;
  cfg.task = Task::construction;
  cfg.sizes = {36, 16};
  CHECK_THROWS_AS(run_experiment(cfg, nullptr), Error);
}

TEST_CASE("single-size experiment has no fitted exponent") {
  ExperimentConfig cfg;
  cfg.task = Task::construction;
  cfg.sizes = {25};
  const auto report = run_experiment(cfg, nullptr);
  CHECK(!report.fitted_exponent.has_value());
  CHECK(report.rows.size() == 1);
}

TEST_CASE("every task runs at a small size") {
  for (Task t : {Task::count, Task::construction, Task::circles, Task::distances, Task::ap3,
                 Task::energy, Task::graph_prod, Task::curve_points, Task::expander}) {
    ExperimentConfig cfg;
    cfg.task = t;
    cfg.sizes = {4, 6};
    cfg.seed = 11;
    cfg.range_lo = -20;
    cfg.range_hi = 20;
    const auto report = run_experiment(cfg, nullptr);
    CHECK(report.rows.size() == 2);
    CHECK(task_from_name(task_name(t)) == t);
  }
  CHECK_THROWS_AS(task_from_name("bogus"), Error);
}
