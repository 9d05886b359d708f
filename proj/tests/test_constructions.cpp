#include <doctest.h>

#include <algorithm>

#include "spexlab/canonical.hpp"
#include "spexlab/constructions.hpp"
#include "spexlab/error.hpp"
#include "spexlab/spectral.hpp"

using namespace spexlab;

namespace {

std::size_t count_prefix(const ForbiddenFamily& f, const std::string& prefix) {
  return std::count_if(f.names().begin(), f.names().end(), [&](const std::string& s) { return s.rfind(prefix, 0) == 0; });
}

Graph add(const PartitionedGraph& t, std::initializer_list<Edge> es) {
  GraphBuilder b(t.graph);
  for (auto e : es) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("F1") {
  const Graph f = f1();
  CHECK(f.order() == 9);
  CHECK(f.edge_count() == 22);
  CHECK(f.degree(kF1Apex) == 8);
  CHECK(chromatic_number(f) == 4);
  CHECK(chromatic_number(f.without_vertex(kF1Apex)) == 3);

  const auto t12 = turan(12, 3), t15 = turan(15, 3);
  // edge in part 0 and in part 1
  CHECK(contains_subgraph(add(t12, {{0, 1}, {4, 5}}), f));
  CHECK(contains_subgraph(add(t15, {{0, 1}, {10, 11}}), f));
  // matchings in one part
  CHECK_FALSE(contains_subgraph(embed_in_part(t12, 0, matching(4)).graph, f));
  CHECK_FALSE(contains_subgraph(embed_in_part(t15, 2, matching(5)).graph, f));
  // P3 u P2 needs a part of five vertices
  CHECK(contains_subgraph(embed_in_part(t15, 0, disjoint_union(path(3), path(2))).graph, f));
}

TEST_CASE("tree census") {
  const std::size_t want[] = {1, 1, 1, 2, 3, 6, 11, 23};
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto ts = trees(k);
    REQUIRE(ts.size() == want[k - 1]);
    for (const auto& t : ts) {
      CHECK(t.connected());
      CHECK(t.edge_count() == k - 1);
    }
  }
  CHECK(is_path_graph(path(5)));
  CHECK_FALSE(is_path_graph(star(5)));
  CHECK(is_star_graph(star(5)));
  CHECK(is_star_graph(path(3)));
}

TEST_CASE("cx1 family") {
  CHECK(count_prefix(cx1_family(3, 4, 3), "(1)") == 0);
  CHECK(count_prefix(cx1_family(3, 5, 4), "(1)") == 1);
  const auto fam = cx1_family(3, 6, 5);
  CHECK(fam.size() == 22);
  CHECK(family_chi(fam) == 4);
  CHECK_THROWS_AS(cx1_family(2, 6, 5), InvalidArgument);
  CHECK_THROWS_AS(cx1_family(3, 6, 4), InvalidArgument);
}

TEST_CASE("cx1 pair") {
  const auto pr = cx1_pair(3, 6, 55);
  CHECK(pr.g.partition.sizes() == std::vector<std::size_t>{19, 18, 18});
  const auto e_t = turan_edges(55, 3);
  CHECK(pr.g.graph.edge_count() == e_t + 15);
  CHECK(pr.h.graph.edge_count() == pr.g.graph.edge_count() + 1);
  // G: three K_{1,5} in part 1, H: P7 u 2 P6 in part 0
  CHECK(isomorphic(pr.g.graph.induced(pr.g.partition[pr.star_part]), u_packing(star(6), 18)));
  const Graph inner = pr.h.graph.induced(pr.h.partition[pr.path_part]);
  CHECK(isomorphic(inner, disjoint_union(path(7), copies(2, path(6)))));
  for (std::size_t i = 0; i < 3; ++i)
    if (i != pr.star_part) CHECK(pr.g.graph.induced(pr.g.partition[i]).edge_count() == 0);
  CHECK_THROWS_AS(cx1_pair(3, 6, 54), InvalidArgument);
  CHECK_THROWS_AS(cx1_pair(3, 6, 58), InvalidArgument);
}

TEST_CASE("cx2 package") {
  for (std::size_t p : {7, 13, 19}) {
    const auto pk = cx2_package(p, 3);
    CHECK(pk.h.graph.edge_count() == p * p + (2 * p) / 3);
    CHECK(pk.g.graph.edge_count() == (p - 1) * (p + 1) + 2 * (p - 1) / 3);
    CHECK(pk.h_prime.graph.edge_count() == pk.h.graph.edge_count());
    CHECK(pk.g.partition.sizes() == std::vector<std::size_t>{p + 1, p - 1});
    CHECK(is_free(pk.g.graph, pk.family));
    CHECK(is_free(pk.h.graph, pk.family));
    CHECK(is_free(pk.h_prime.graph, pk.family));
  }
  CHECK_THROWS_AS(cx2_package(8, 3), InvalidArgument);
  CHECK_THROWS_AS(cx2_package(4, 3), InvalidArgument);
  CHECK(cx2_family(3).size() == 3);
}

TEST_CASE("star and path pairs") {
  const auto sp = star_path_pair(60, 3, 4);
  CHECK(sp.star.graph.edge_count() == sp.path.graph.edge_count());
  CHECK(sp.star.graph.edge_count() == turan_edges(60, 3) + 15);
  const auto sp5 = star_path_pair(60, 3, 5);
  CHECK(sp5.star.graph.edge_count() == sp5.path.graph.edge_count());
  CHECK(spectral_radius(sp5.star.graph).lambda - spectral_radius(sp5.path.graph).lambda > 1e-9);
  CHECK_THROWS_AS(star_path_pair(61, 3, 4), InvalidArgument);
  CHECK_THROWS_AS(star_path_pair(60, 3, 7), InvalidArgument);
}

TEST_CASE("cx1 freeness depends on m") {
  // with m = k - 1 a star centre plus five leaves and five vertices of the
  // large part form K_{5,5}, joined to a K_{1,6} from the third part
  const auto pr = cx1_pair(3, 6, 55);
  const auto fam5 = cx1_family(3, 6, 5);
  const auto idx = first_contained(pr.g.graph, fam5);
  REQUIRE(idx.has_value());
  const auto emb = find_embedding(pr.g.graph, fam5[*idx]);
  REQUIRE(emb.has_value());
  for (const auto& e : fam5[*idx].edges()) CHECK(pr.g.graph.adjacent((*emb)[e.u], (*emb)[e.v]));
  CHECK(is_free(pr.h.graph, fam5));

  for (std::size_t m : {6, 7}) {
    const auto fam = cx1_family(3, 6, m);
    CHECK(is_free(pr.g.graph, fam));
    CHECK(is_free(pr.h.graph, fam));
  }
}
