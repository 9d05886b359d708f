#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "spexlab/rational.hpp"

namespace spexlab {

/// Closed interval with outward rounding: every operation widens its
/// correctly-rounded result by one ulp on each side.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
  static double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

  static Interval point(double x) { return {x, x}; }
  static Interval of(const Rational& q) {
    const double d = q.get_d();  // truncates, so widen both ways
    return {down(d), up(d)};
  }

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }

  friend Interval operator+(Interval a, Interval b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }
  friend Interval operator-(Interval a, Interval b) { return {down(a.lo - b.hi), up(a.hi - b.lo)}; }
  friend Interval operator*(Interval a, Interval b) {
    const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
  }
  friend Interval operator/(Interval a, Interval b) {
    // callers keep denominators positive
    const double p[] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
  }
  friend Interval sqrt(Interval a) { return {down(std::sqrt(std::max(0.0, a.lo))), up(std::sqrt(a.hi))}; }
};

}  // namespace spexlab
