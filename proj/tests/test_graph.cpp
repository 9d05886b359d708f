#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "spexlab/error.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/spectral.hpp"

using namespace spexlab;

namespace {

std::size_t choose2(std::size_t x) { return x * (x - (x ? 1 : 0)) / 2; }

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("graph invariants") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(rng, 1 + i % 20, 0.4);
    std::size_t degsum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK_FALSE(g.adjacent(v, v));
      degsum += g.degree(v);
      for (Vertex w = 0; w < g.order(); ++w) CHECK(g.adjacent(v, w) == g.adjacent(w, v));
    }
    CHECK(degsum == 2 * g.edge_count());
  }
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), InvalidArgument);
  CHECK_THROWS_AS(b.add_edge(0, 3), InvalidArgument);
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition(3, {{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), InvalidArgument);
  Partition p(4, {{2, 0}, {1, 3}});
  CHECK(p.class_of(2) == 0);
  CHECK(p.class_of(3) == 1);
}

TEST_CASE("turan graphs") {
  auto t62 = turan(6, 2);
  CHECK(t62.graph.edge_count() == 9);
  CHECK(t62.partition.sizes() == std::vector<std::size_t>{3, 3});
  auto t73 = turan(7, 3);
  CHECK(t73.graph.edge_count() == 16);
  CHECK(t73.partition.sizes() == std::vector<std::size_t>{3, 2, 2});
  CHECK(turan(5, 5).graph == complete(5));
  CHECK_THROWS_AS(turan(4, 0), InvalidArgument);
  CHECK_THROWS_AS(turan(4, 5), InvalidArgument);

  for (std::size_t n = 1; n <= 50; ++n)
    for (std::size_t r = 1; r <= n; ++r) {
      const std::size_t lo = n / r, big = n % r;
      const std::size_t want = choose2(n) - big * choose2(lo + 1) - (r - big) * choose2(lo);
      REQUIRE(turan_edges(n, r) == want);
      if (n <= 20) REQUIRE(turan(n, r).graph.edge_count() == want);
    }
}

TEST_CASE("complete multipartite") {
  CHECK(complete_multipartite({1, 1, 1}).graph == complete(3));
  CHECK(complete_multipartite({2, 3}).graph.edge_count() == 6);
  CHECK(complete_multipartite({3, 2, 2}).graph == turan(7, 3).graph);
  CHECK_THROWS_AS(complete_multipartite(std::span<const std::size_t>{}), InvalidArgument);
}

TEST_CASE("basic constructors") {
  CHECK(path(3).edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  const Graph pp = path_power(7, 3);
  CHECK(pp.neighbor_list(0) == std::vector<Vertex>{1, 2, 3});
  CHECK(pp.edge_count() == 6 + 5 + 4);
  CHECK(matching(5).edge_count() == 2);
  CHECK(matching(5).degree(4) == 0);
  CHECK(star(5).degree(0) == 4);
  CHECK(star(5).edge_count() == 4);
  CHECK(cycle(5).edge_count() == 5);
  CHECK_THROWS_AS(cycle(2), InvalidArgument);
  CHECK(complete(6).edge_count() == 15);
  CHECK(empty_graph(4).edge_count() == 0);
}

TEST_CASE("join and union") {
  CHECK(join(complete(1), path(3)).edge_count() == 5);
  const Graph two = copies(2, path(3));
  CHECK(two.order() == 6);
  CHECK(two.edge_count() == 4);
  CHECK(join(matching(4), join(matching(4), empty_graph(0))).edge_count() == 20);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> sz(0, 12);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_graph(rng, sz(rng), 0.5), h = random_graph(rng, sz(rng), 0.5);
    const Graph u = disjoint_union(g, h), j = join(g, h);
    REQUIRE(u.order() == g.order() + h.order());
    REQUIRE(u.edge_count() == g.edge_count() + h.edge_count());
    REQUIRE(j.edge_count() == g.edge_count() + h.edge_count() + g.order() * h.order());
  }
}

TEST_CASE("u_packing") {
  CHECK(u_packing(path(3), 7) == disjoint_union(copies(2, path(3)), empty_graph(1)));
  CHECK(u_packing(path(3), 6) == copies(2, path(3)));
  CHECK(u_packing(star(6), 4) == empty_graph(4));
}

TEST_CASE("embed_in_part") {
  auto a = embed_in_part(turan(6, 2), 0, u_packing(path(3), 3));
  CHECK(a.graph.edge_count() == 11);
  CHECK(a.graph.adjacent(0, 1));
  CHECK(a.graph.adjacent(1, 2));
  auto b = embed_in_part(turan(6, 3), 0, matching(2));
  CHECK(b.graph == turan(6, 3).graph.with_edge(0, 1));
  CHECK_THROWS_AS(embed_in_part(turan(6, 2), 0, path(4)), InvalidArgument);
  CHECK_THROWS_AS(embed_in_part(turan(6, 2), 2, path(3)), InvalidArgument);
}

TEST_CASE("transfer_vertex") {
  auto t = turan(7, 3);
  auto moved = transfer_vertex(t.graph, t.partition, 0, 1, t.partition[0][0]);
  CHECK(moved.graph.edge_count() == 16);
  CHECK(moved.partition.sizes() == std::vector<std::size_t>{2, 3, 2});
  CHECK(moved.graph == complete_multipartite({2, 3, 2}).graph.relabel(std::vector<Vertex>{1, 2, 0, 3, 4, 5, 6}));

  auto t6 = turan(6, 2);
  auto m6 = transfer_vertex(t6.graph, t6.partition, 0, 1, 0);
  CHECK(m6.graph.edge_count() == 8);
  CHECK(m6.partition.order() == 6);

  // pendant vertex of a tree embedded in part 0 of T_{12,2}: delta = |W_0| - |W_1| - 2
  auto host = embed_in_part(turan(12, 2), 0, path(6));
  auto moved2 = transfer_vertex(host.graph, host.partition, 0, 1, 0);
  CHECK(long(moved2.graph.edge_count()) - long(host.graph.edge_count()) == 6 - 6 - 2);
  // ordinary vertex: delta = |W_i| - |W_j| - 1
  auto host3 = turan(11, 3);
  auto moved3 = transfer_vertex(host3.graph, host3.partition, 0, 2, 0);
  CHECK(long(moved3.graph.edge_count()) - long(host3.graph.edge_count()) == 4 - 3 - 1);

  CHECK_THROWS_AS(transfer_vertex(t.graph, t.partition, 1, 0, t.partition[0][0]), InvalidArgument);
  CHECK_THROWS_AS(transfer_vertex(host.graph, host.partition, 0, 1, 1), InvalidArgument);
}

TEST_CASE("kelmans") {
  // path a-b-c-d, move c's other neighbour d onto b
  const Graph k = kelmans(path(4), 1, 2);
  CHECK(k.degree(1) == 3);
  CHECK(k.edge_count() == 3);
  CHECK(kelmans(complete(5), 0, 3) == complete(5));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 3 + i % 8;
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v) b.add_edge(v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
    const Graph t = std::move(b).build();
    Vertex u = std::uniform_int_distribution<Vertex>(0, n - 1)(rng), v = (u + 1 + i) % n;
    if (u == v) v = (v + 1) % n;
    const Graph kt = kelmans(t, u, v);
    REQUIRE(kt.edge_count() == t.edge_count());
    REQUIRE(spectral_radius(kt).lambda >= spectral_radius(t).lambda - 1e-9);
  }
}

TEST_CASE("walk counts") {
  CHECK(total_walks2(path(4)) == 10);
  CHECK(total_walks2(star(4)) == 12);
  CHECK(total_walks2(matching(4)) == 4);
  for (std::size_t k = 3; k <= 9; ++k) {
    CHECK(total_walks2(path(k)) == 4 * k - 6);
    CHECK(total_walks2(star(k)) == k * (k - 1));
  }
}

TEST_CASE("derived graphs") {
  const Graph c = cycle(5);
  CHECK(c.complement().edge_count() == 5);
  CHECK(c.without_vertex(0) == path(4).relabel(std::vector<Vertex>{0, 1, 2, 3}));
  CHECK(c.without_edge(0, 1).edge_count() == 4);
  CHECK(disjoint_union(path(3), path(2)).components().size() == 2);
  CHECK(c.connected());
  const std::vector<Vertex> keep{0, 1, 2};
  CHECK(complete(5).induced(keep) == complete(3));
}
