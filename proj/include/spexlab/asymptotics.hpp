#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spexlab/interval.hpp"
#include "spexlab/rational.hpp"

namespace spexlab {

/// Enclosure of the tree-order threshold E(r), r >= 3.
Interval threshold_expression(std::size_t r);
/// ceil(E(r)), certified by interval bounds and, if needed, an exact sign test.
std::size_t threshold_ceiling(std::size_t r);

struct Thresholds {
  std::size_t r = 0;
  Interval e;
  std::size_t k = 0;
  Rational c;  // (k-1)/(kr)
  Interval c1;
};
Thresholds thresholds(std::size_t r);

double c1(std::size_t r);
Interval c1_enclosure(std::size_t r);
Rational c_of_r(std::size_t r);
std::size_t k_bound(const Rational& q, std::size_t r);
/// 2 - (k-5+6/k)/(r-1) - 4(k-1)/(kr), exact.
Rational gap_constant(std::size_t r, std::size_t k);

struct Sample {
  std::size_t n = 0;
  double delta = 0.0;
};

struct FitResult {
  std::string experiment;
  std::map<std::string, long> params;
  std::vector<Sample> samples;  // strictly increasing n
  double first_order = 0.0;
  double error_estimate = 0.0;
  std::optional<double> predicted;
  std::string predicted_formula;
};

/// Richardson extrapolation of n*delta under delta = C/n + D/n^2 + o(n^-2).
FitResult fit_first_order(std::vector<Sample> samples);

struct ExperimentOptions {
  std::size_t jobs = 1;
  double tol = 1e-11;
  std::vector<std::size_t> n_values;  // empty: automatic schedule
  std::size_t points = 4;
};

/// star_vs_path (r,k) | edge_add (r,b,a) | transfer_shift (r,k) | cx1_gap (r,k)
FitResult experiment(const std::string& name, const std::map<std::string, long>& params,
                     const ExperimentOptions& opt = {});
std::vector<std::size_t> experiment_schedule(const std::string& name, const std::map<std::string, long>& params,
                                             std::size_t points = 4);
std::vector<std::string> experiment_names();

}  // namespace spexlab
