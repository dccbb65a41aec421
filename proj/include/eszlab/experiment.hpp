#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eszlab/arithapps.hpp"
#include "eszlab/circlegeom.hpp"
#include "eszlab/rng.hpp"

namespace eszlab::experiment {

using eszcount::BigInt;
using eszcount::RatSet;
using exactq::Rational;

enum class Task {
  count,
  construction,
  circles,
  distances,
  ap3,
  energy,
  graph_prod,
  curve_points,
  expander,
};

Task task_from_name(const std::string& name);
std::string task_name(Task t);

struct ExperimentConfig {
  Task task = Task::construction;
  std::vector<long> sizes;
  std::uint64_t seed = 1;

  // Random-set parameters.
  long range_lo = -50;
  long range_hi = 50;
  long den_max = 1;

  // Task-specific knobs.
  std::string poly = "(x-y)^2 + x - z";  // count
  std::string curve = "y^2 = x^5 + 1";   // curve-points
  std::string h = "x^4";                 // expander
  std::string g = "y^2";                 // expander
  std::string alpha = "1";               // graph-prod
  std::string beta = "1";                // graph-prod
};

struct GrowthRow {
  long n = 0;
  BigInt count;
  double elapsed_ms = 0;
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  std::optional<double> fitted_exponent;
  // Slopes the measurements are typically compared against.
  std::vector<double> reference_exponents{11.0 / 6, 9.0 / 5, 5.0 / 3, 3.0 / 2, 3.0 / 5};
};

// Least-squares slope of log(count) against log(n) over rows with positive
// count; absent when fewer than two usable rows or all sizes coincide.
std::optional<double> fit_exponent(const std::vector<GrowthRow>& rows);

// Draws `size` distinct rationals num/den with num in [lo, hi] and den in
// [1, den_max]. Errors when the range cannot supply enough distinct values.
std::vector<Rational> generate_set(SplitMix64& rng, std::size_t size, long lo, long hi,
                                   long den_max);

// Runs the task at every size (sequentially, in config order), writes CSV
// rows "N,count,elapsed_ms" when csv is non-null, and fits the exponent.
GrowthReport run_experiment(const ExperimentConfig& config, std::ostream* csv);

}  // namespace eszlab::experiment
