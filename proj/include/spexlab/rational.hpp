#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace spexlab {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" (or "p" when integral).
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t order) : n_(order), a_(order * order) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t order() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  bool nonnegative() const;
  static RationalMatrix identity(std::size_t n);

  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

/// Polynomial with rational coefficients, coeffs[i] multiplies t^i.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const;
  RationalPoly derivative() const;
  RationalPoly monic() const;
  RationalPoly operator-() const;
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Remainder of a divided by b (b nonzero).
RationalPoly poly_rem(const RationalPoly& a, const RationalPoly& b);
/// Monic gcd; zero only when both inputs are zero.
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);

/// Monic characteristic polynomial det(tI - m), Faddeev–LeVerrier.
RationalPoly char_poly(const RationalMatrix& m);

/// Sturm chain of p (p, p', -rem, ...).
std::vector<RationalPoly> sturm_chain(const RationalPoly& p);
/// Number of distinct real roots of p in (a, b); a < b and neither may be a root.
std::size_t count_roots(const std::vector<RationalPoly>& chain, const Rational& a, const Rational& b);
/// Cauchy bound: every real root lies strictly inside (-B, B).
Rational root_bound(const RationalPoly& p);

}  // namespace spexlab
