#include <doctest.h>

#include <cmath>

#include "spexlab/asymptotics.hpp"
#include "spexlab/error.hpp"

using namespace spexlab;

namespace {

long double plain_e(long double r) {
  const long double b = 2 + 5 / (r - 1) - 4 / r;
  return (r - 1) / 2 * (b + std::sqrt(b * b - 4 / (r - 1) * (6 / (r - 1) - 4 / r)));
}

}  // namespace

TEST_CASE("threshold expression") {
  const auto e3 = threshold_expression(3);
  CHECK(e3.lo > 5.75);
  CHECK(e3.hi < 5.76);
  CHECK(threshold_ceiling(3) == 6);
  const auto e4 = threshold_expression(4);
  CHECK(e4.lo > 7.60);
  CHECK(e4.hi < 7.61);
  CHECK(threshold_ceiling(4) == 8);
  CHECK(c_of_r(4) == Rational(7, 32));
  CHECK(c_of_r(10) == Rational(19, 200));
  for (std::size_t r = 3; r <= 10; ++r) {
    const auto e = threshold_expression(r);
    CHECK(e.width() <= 1e-12);
    CHECK(std::floor(e.lo) == std::floor(e.hi));
    CHECK(e.contains(double(plain_e(r))));
  }
  CHECK_THROWS_AS(threshold_expression(2), InvalidArgument);
}

TEST_CASE("threshold table") {
  const Rational table[] = {Rational(5, 18),  Rational(7, 32),   Rational(9, 50),   Rational(11, 72),
                            Rational(13, 98), Rational(15, 128), Rational(17, 162), Rational(19, 200)};
  for (std::size_t r = 3; r <= 10; ++r) CHECK(c_of_r(r) == table[r - 3]);
  for (std::size_t r = 3; r <= 100; ++r) {
    const auto t = thresholds(r);
    CHECK(t.k >= 2);
    CHECK(t.k == std::size_t(std::ceil(plain_e(r))));
    CHECK(t.c < Rational(1, long(r)));
    CHECK(t.c == Rational(long(t.k - 1), long(t.k * r)));
  }
  CHECK(std::abs(c1(1000) * 1000 - 1) < 0.05);
  CHECK(c1(3) == doctest::Approx(double((1 - 1 / plain_e(3)) / 3)));
  CHECK(c1_enclosure(5).contains(double((1 - 1 / plain_e(5)) / 5)));
}

TEST_CASE("k bound and gap constant") {
  CHECK(k_bound(Rational(1, 6), 3) == 2);
  CHECK(k_bound(Rational(0), 3) == 1);
  CHECK(k_bound(Rational(1, 4), 3) == 4);
  CHECK_THROWS_AS(k_bound(Rational(1, 3), 3), InvalidArgument);
  // 2 - (k-5+6/k)/(r-1) - 4(k-1)/(kr) is positive exactly below E(r)
  for (std::size_t r = 3; r <= 12; ++r)
    for (std::size_t k = 1; k <= 30; ++k) {
      const long double direct = 2.0L - (k - 5.0L + 6.0L / k) / (r - 1.0L) - 4.0L * (k - 1) / (k * r);
      CHECK(gap_constant(r, k).get_d() == doctest::Approx(double(direct)));
      CHECK((sgn(gap_constant(r, k)) > 0) == (k < plain_e(r)));
    }
}

TEST_CASE("first-order fit on synthetic data") {
  std::vector<Sample> exact;
  for (std::size_t n : {100, 200, 400}) exact.push_back({n, 2.0 / n});
  auto f = fit_first_order(exact);
  CHECK(std::abs(f.first_order - 2.0) <= 1e-12);

  std::vector<Sample> two;
  for (std::size_t n : {400, 100, 200}) two.push_back({n, 3.0 / n - 5.0 / (double(n) * n)});
  f = fit_first_order(two);
  CHECK(std::abs(f.first_order - 3.0) <= 1e-9);
  CHECK(f.samples.front().n == 100);
  CHECK(f.error_estimate <= 1e-9);

  CHECK_THROWS_AS(fit_first_order({{100, 0.1}, {200, 0.05}}), InvalidArgument);
  CHECK_THROWS_AS(fit_first_order({{100, 0.1}, {100, 0.1}, {200, 0.05}}), InvalidArgument);
}

TEST_CASE("experiments") {
  CHECK(experiment_schedule("cx1_gap", {{"r", 3}, {"k", 6}}) == std::vector<std::size_t>{55, 109, 217, 433});
  CHECK(experiment_schedule("star_vs_path", {{"r", 3}, {"k", 4}}) == std::vector<std::size_t>{120, 240, 480, 960});
  CHECK_THROWS_AS(experiment("nope", {}), InvalidArgument);
  CHECK_THROWS_AS(experiment("star_vs_path", {{"r", 3}}), InvalidArgument);
  ExperimentOptions bad;
  bad.n_values = {100, 200, 400};  // 100 is not a multiple of rk = 12
  CHECK_THROWS_AS(experiment("star_vs_path", {{"r", 3}, {"k", 4}}, bad), InvalidArgument);

  auto sp = experiment("star_vs_path", {{"r", 3}, {"k", 4}});
  CHECK(sp.first_order == doctest::Approx(0.25).epsilon(0.05));
  REQUIRE(sp.predicted.has_value());
  CHECK(*sp.predicted == doctest::Approx(0.25));
  auto ea = experiment("edge_add", {{"r", 3}, {"b", 2}, {"a", 0}});
  CHECK(ea.first_order == doctest::Approx(4.0).epsilon(0.05));
  auto ts = experiment("transfer_shift", {{"r", 3}, {"k", 6}});
  CHECK(ts.first_order == doctest::Approx(-10.0 / 9).epsilon(0.05));

  ExperimentOptions par;
  par.jobs = 3;
  auto a = experiment("cx1_gap", {{"r", 3}, {"k", 6}}), b = experiment("cx1_gap", {{"r", 3}, {"k", 6}}, par);
  CHECK(a.first_order == b.first_order);
  CHECK(a.first_order == doctest::Approx(-1.0 / 9).epsilon(0.15));
}

TEST_CASE("cx1 gap changes sign at E(r)") {
  for (std::size_t r : {3, 4})
    for (std::size_t k = 3; k <= 9; ++k) {
      const long double e = plain_e(r);
      if (std::abs(k - e) < 0.2) continue;
      auto f = experiment("cx1_gap", {{"r", long(r)}, {"k", long(k)}});
      INFO("r=" << r << " k=" << k << " C=" << f.first_order);
      CHECK((f.first_order < 0) == (k > e));
    }
}
