#include <doctest.h>

#include <random>

#include "spexlab/constructions.hpp"
#include "spexlab/error.hpp"
#include "spexlab/oracle.hpp"
#include "spexlab/patterns.hpp"
#include "spexlab/reference.hpp"

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

std::vector<Graph> all_up_to(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto gs = enumerate_graphs(k);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

bool is_embedding(const Graph& host, const Graph& pattern, const std::vector<Vertex>& map) {
  if (map.size() != pattern.order()) return false;
  std::vector<char> used(host.order(), 0);
  for (auto v : map)
    if (v >= host.order() || used[v]++) return false;
  for (const auto& e : pattern.edges())
    if (!host.adjacent(map[e.u], map[e.v])) return false;
  return true;
}

}  // namespace

TEST_CASE("containment examples") {
  CHECK(contains_subgraph(complete(4), cycle(4)));
  CHECK_FALSE(contains_subgraph(cycle(5), complete(3)));
  CHECK(contains_subgraph(cycle(6), path(6)));
  CHECK_FALSE(contains_subgraph(path(3), path(4)));
  CHECK(contains_subgraph(empty_graph(3), empty_graph(3)));
}

TEST_CASE("matcher agrees with exhaustive injection search") {
  const auto hosts = all_up_to(7);
  const auto patterns = all_up_to(5);
  std::size_t pairs = 0;
  for (const auto& h : hosts)
    for (const auto& p : patterns) {
      if (p.order() > h.order()) continue;
      ++pairs;
      auto emb = find_embedding(h, p);
      REQUIRE(emb.has_value() == reference::contains_by_injection(h, p));
      if (emb) REQUIRE(is_embedding(h, p, *emb));
    }
  CHECK(pairs > 60000);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const Graph h = random_graph(rng, 8 + i % 2, 0.5);
    const Graph p = random_graph(rng, 3 + i % 4, 0.5);
    REQUIRE(contains_subgraph(h, p) == reference::contains_by_injection(h, p));
  }
}

TEST_CASE("freeness") {
  ForbiddenFamily k4({complete(4)}, {"K4"});
  CHECK_FALSE(is_free(complete(4), k4));
  for (std::size_t r = 1; r <= 4; ++r) {
    ForbiddenFamily fam({complete(r + 1)});
    for (std::size_t n = r; n <= 12; ++n) REQUIRE(is_free(turan(n, r).graph, fam));
  }
  CHECK_THROWS_AS(ForbiddenFamily({empty_graph(3)}), InvalidArgument);
  CHECK_THROWS_AS(ForbiddenFamily(std::vector<Graph>{}), InvalidArgument);
  ForbiddenFamily two({cycle(5), complete(3)}, {"C5", "K3"});
  CHECK(first_contained(complete(5), two) == 0u);
  CHECK(first_contained(complete(3), two) == 1u);
  CHECK(first_contained(path(5), two) == std::nullopt);

  // H of the chromatic-number-3 construction at p = 7, m = 3
  const auto pk = cx2_package(7, 3);
  CHECK(is_free(pk.h.graph, pk.family));
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(cycle(5)) == 3);
  CHECK(chromatic_number(cycle(6)) == 2);
  CHECK(chromatic_number(empty_graph(4)) == 1);
  CHECK(chromatic_number(empty_graph(0)) == 0);
  for (std::size_t r = 1; r <= 7; ++r) CHECK(chromatic_number(complete(r + 2)) == r + 2);
  CHECK(chromatic_number(f1()) == 4);
  CHECK(chromatic_number(f1().without_vertex(kF1Apex)) == 3);
  CHECK(clique_number(turan(9, 3).graph) == 3);

  for (const auto& g : all_up_to(7)) REQUIRE(chromatic_number(g) == reference::chromatic_by_assignment(g));
  // Mycielski-type graph: Groetzsch, triangle-free with chi 4
  GraphBuilder b(11);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, (i + 1) % 5);
    b.add_edge(5 + i, (i + 4) % 5);
    b.add_edge(10, 5 + i);
  }
  const Graph grotzsch = std::move(b).build();
  CHECK(clique_number(grotzsch) == 2);
  CHECK(chromatic_number(grotzsch) == 4);
}

TEST_CASE("family chromatic number") {
  CHECK(family_chi(ForbiddenFamily({complete(4), cycle(5)})) == 3);
  CHECK(family_chi(cx1_family(3, 6, 5)) == 4);
  CHECK(family_chi(cx2_family(3)) == 3);
}
