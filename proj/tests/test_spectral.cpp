#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "spexlab/constructions.hpp"
#include "spexlab/error.hpp"
#include "spexlab/json_io.hpp"
#include "spexlab/spectral.hpp"

using namespace spexlab;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

double quotient_root(const RationalMatrix& q) {
  auto [lo, hi] = perron_bracket(q, Rational(1, 1000000000000L));
  return Rational((lo + hi) / 2).get_d();
}

}  // namespace

TEST_CASE("spectral radius of standard graphs") {
  for (std::size_t n = 2; n <= 12; ++n) CHECK(spectral_radius(complete(n)).lambda == doctest::Approx(n - 1.0).epsilon(1e-10));
  for (std::size_t k = 2; k <= 12; ++k) CHECK(spectral_radius(star(k)).lambda == doctest::Approx(std::sqrt(k - 1.0)).epsilon(1e-10));
  CHECK(std::abs(spectral_radius(turan(12, 3).graph).lambda - 8.0) <= 1e-9);
  CHECK(std::abs(spectral_radius(cycle(7)).lambda - 2.0) <= 1e-9);
  CHECK(std::abs(spectral_radius(path(4)).lambda - (1 + std::sqrt(5.0)) / 2) <= 1e-9);
  // bipartite must not oscillate
  CHECK(std::abs(spectral_radius(complete_multipartite({3, 12}).graph).lambda - 6.0) <= 1e-9);

  const auto e = spectral_radius(empty_graph(4));
  CHECK(e.lambda == 0.0);
  CHECK(e.eigvec == std::vector<double>(4, 0.0));
  CHECK_THROWS_AS(spectral_radius(path(3), 0.0), InvalidArgument);
}

TEST_CASE("eigenvector contract") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_graph(rng, 2 + i % 30, 0.25);
    if (g.edge_count() == 0) continue;
    const auto s = spectral_radius(g, 1e-10);
    CHECK(s.residual <= 1e-10);
    CHECK(eigen_residual(g, s.lambda, s.eigvec) <= 1e-10);
    CHECK(*std::max_element(s.eigvec.begin(), s.eigvec.end()) == doctest::Approx(1.0));
    if (g.connected())
      for (double x : s.eigvec) CHECK(x > 0);
  }
  // disconnected: vector lives on the better component
  const auto s = spectral_radius(disjoint_union(path(3), complete(4)));
  CHECK(s.eigvec[0] == 0.0);
  CHECK(s.eigvec[3] == doctest::Approx(1.0));
}

TEST_CASE("convergence failure keeps the best estimate") {
  try {
    spectral_radius(path(60), 1e-12, 3);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best().lambda > 1.0);
    CHECK(e.best().residual > 1e-12);
    CHECK(e.best().eigvec.size() == 60);
  }
}

TEST_CASE("monotonicity") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 3 + i % 15, 0.4);
    // random subgraph
    GraphBuilder b(g.order());
    std::bernoulli_distribution keep(0.6);
    for (const auto& e : g.edges())
      if (keep(rng)) b.add_edge(e.u, e.v);
    const Graph h = std::move(b).build();
    REQUIRE(spectral_radius(h).lambda <= spectral_radius(g).lambda + 1e-9);
    if (!g.connected()) continue;
    const double base = spectral_radius(g).lambda;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if (!g.adjacent(u, v)) REQUIRE(spectral_radius(g.with_edge(u, v)).lambda > base);
  }
}

TEST_CASE("equitable partitions and quotients") {
  CHECK(is_equitable(cycle(5), Partition::singletons(5)));
  const auto t = turan(6, 2);
  CHECK(is_equitable(t.graph, t.partition));
  CHECK(quotient_matrix(t.graph, t.partition) == RationalMatrix{{0, 3}, {3, 0}});
  CHECK_FALSE(is_equitable(path(3), Partition(3, {{0, 1, 2}})));
  try {
    quotient_matrix(path(3), Partition(3, {{0, 1, 2}}));
    FAIL("expected InvalidArgument");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("vertices") != std::string::npos);
  }

  const auto pk = cx2_package(7, 3);
  CHECK(is_equitable(pk.g.graph, pk.g_eq));
  CHECK(quotient_matrix(pk.g.graph, pk.g_eq) == RationalMatrix{{0, 2, 8}, {1, 0, 8}, {2, 4, 0}});
  CHECK(quotient_matrix(pk.h.graph, pk.h_eq) == RationalMatrix{{0, 2, 0, 7}, {1, 0, 0, 7}, {0, 0, 0, 7}, {2, 4, 1, 0}});
  CHECK(quotient_matrix(pk.h_prime.graph, pk.h_prime_eq) ==
        RationalMatrix{{0, 2, 0, 7}, {1, 0, 0, 7}, {0, 0, 1, 7}, {1, 2, 4, 0}});
}

TEST_CASE("float radius matches the quotient root") {
  for (std::size_t p : {7, 13, 19, 25}) {
    const auto pk = cx2_package(p, 3);
    for (auto [g, eq] : {std::pair{&pk.g.graph, &pk.g_eq}, {&pk.h.graph, &pk.h_eq}, {&pk.h_prime.graph, &pk.h_prime_eq}}) {
      REQUIRE(is_equitable(*g, *eq));
      CHECK(std::abs(spectral_radius(*g).lambda - quotient_root(quotient_matrix(*g, *eq))) <= 1e-8);
    }
  }
  for (std::size_t n : {7, 10, 13}) {
    const auto t = turan(n, 3);
    CHECK(std::abs(spectral_radius(t.graph).lambda - quotient_root(quotient_matrix(t.graph, t.partition))) <= 1e-8);
  }
}

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly(RationalMatrix{{0, 3}, {3, 0}}) == RationalPoly({-9, 0, 1}));
  CHECK(char_poly(RationalMatrix::identity(2)) == RationalPoly({1, -2, 1}));
  CHECK(char_poly(adjacency_matrix(complete(3))) == RationalPoly({-2, -3, 0, 1}));
  const auto b = RationalMatrix{{0, 2, 8}, {1, 0, 8}, {2, 4, 0}};
  const auto cp = char_poly(b);
  CHECK(cp.degree() == 3);
  const Rational bound = Rational(7) + Rational(2, 3) - Rational(1, 35);
  CHECK(sgn(cp(bound)) < 0);

  // Sturm counting on (t-1)(t-2)(t-3)
  const RationalPoly p({-6, 11, -6, 1});
  const auto chain = sturm_chain(p);
  CHECK(count_roots(chain, Rational(0), Rational(4)) == 3);
  CHECK(count_roots(chain, Rational(3, 2), Rational(5, 2)) == 1);
  CHECK_THROWS(count_roots(chain, Rational(1), Rational(4)));
}

TEST_CASE("exact Perron comparisons") {
  const RationalMatrix k2{{0, 3}, {3, 0}};
  CHECK(perron_less_than(k2, Rational(4)));
  CHECK_FALSE(perron_less_than(k2, Rational(3)));
  const Rational bound = Rational(7) + Rational(2, 3) - Rational(1, 35);
  CHECK(perron_less_than(RationalMatrix{{0, 2, 0, 7}, {1, 0, 0, 7}, {0, 0, 0, 7}, {2, 4, 1, 0}}, bound));
  CHECK_FALSE(perron_less_than(RationalMatrix{{0, 2, 8}, {1, 0, 8}, {2, 4, 0}}, bound));

  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const auto m = adjacency_matrix(random_graph(rng, 2 + i % 7, 0.5));
    Rational q1(long(rng() % 4000), 1000), q2 = q1 + Rational(long(rng() % 1000 + 1), 1000);
    if (sgn(q1) == 0) continue;
    if (perron_less_than(m, q1)) REQUIRE(perron_less_than(m, q2));
  }

  CHECK(compare_lambda_exact(cycle(4), path(4)) == std::strong_ordering::greater);
  CHECK(compare_lambda_exact(star(5), cycle(4)) == std::strong_ordering::equal);
  const Graph g = disjoint_union(path(5), cycle(3));
  CHECK(compare_lambda_exact(g, g.relabel(std::vector<Vertex>{7, 3, 5, 1, 0, 2, 6, 4})) == std::strong_ordering::equal);

  const auto cert = perron_certificate(complete(3));
  CHECK(cert.char_poly == RationalPoly({-2, -3, 0, 1}));
  CHECK(cert.lo < 2);
  CHECK(cert.hi >= 2);
}

TEST_CASE("json emission") {
  const auto j = to_json(spectral_radius(complete(3)));
  CHECK(j.contains("lambda"));
  CHECK(j.contains("residual"));
  CHECK(j.contains("iterations"));
  CHECK(to_json(Rational(-6, 4)) == "-3/2");
  CHECK(to_json(RationalMatrix{{0, 3}, {3, 0}}).dump() == R"([["0","3"],["3","0"]])");
  const auto pg = turan(5, 2);
  const auto back = partitioned_graph_from_json(to_json(pg));
  CHECK(back.graph == pg.graph);
  CHECK(back.partition.classes() == pg.partition.classes());
}
