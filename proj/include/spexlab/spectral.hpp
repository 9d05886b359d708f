#pragma once

#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spexlab/graph.hpp"
#include "spexlab/rational.hpp"

namespace spexlab {

struct SpectralResult {
  double lambda = 0.0;
  std::vector<double> eigvec;  // max entry 1, zero off the attaining component
  double residual = 0.0;
  std::size_t iterations = 0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, SpectralResult best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const SpectralResult& best() const noexcept { return best_; }

 private:
  SpectralResult best_;
};

inline constexpr double kDefaultTol = 1e-10;
inline constexpr std::size_t kDefaultMaxIter = 1'000'000;

/// Power iteration on A + I per component, started from all ones.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTol, std::size_t max_iter = kDefaultMaxIter);
/// Eigen-residual ||Ax - lambda x||_inf of a candidate pair.
double eigen_residual(const Graph& g, double lambda, const std::vector<double>& x);

bool is_equitable(const Graph& g, const Partition& p);
RationalMatrix quotient_matrix(const Graph& g, const Partition& p);
RationalMatrix adjacency_matrix(const Graph& g);

/// Exact test rho(m) < q for nonnegative m and q > 0.
bool perron_less_than(const RationalMatrix& m, const Rational& q);
/// Rational lo < hi with lo <= rho(m) < hi and hi - lo <= width.
std::pair<Rational, Rational> perron_bracket(const RationalMatrix& m, const Rational& width);

/// Exact comparison of spectral radii.
std::strong_ordering compare_lambda_exact(const Graph& g, const Graph& h);

/// Integer characteristic polynomial of A(g) plus a rational interval
/// (lo, hi] around the Perron root containing no other root.
struct PerronCertificate {
  RationalPoly char_poly;
  Rational lo;
  Rational hi;
};
PerronCertificate perron_certificate(const Graph& g);

}  // namespace spexlab
