#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "spexlab/canonical.hpp"
#include "spexlab/constructions.hpp"
#include "spexlab/error.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/oracle.hpp"
#include "spexlab/reference.hpp"

using namespace spexlab;

namespace {

std::vector<std::string> forms(std::initializer_list<Graph> gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(canonical_form(g));
  std::sort(out.begin(), out.end());
  return out;
}

struct BruteEx {
  std::size_t ex = 0;
  std::set<std::uint64_t> extremal;
};

// labelled enumeration, permutation dedup, injection containment
BruteEx brute_ex(std::size_t n, const ForbiddenFamily& fam) {
  BruteEx out;
  for (auto key : reference::labelled_classes(n)) {
    const Graph g = reference::from_key(n, key);
    bool free = true;
    for (const auto& m : fam.members()) free = free && !reference::contains_by_injection(g, m);
    if (!free) continue;
    if (g.edge_count() > out.ex) {
      out.ex = g.edge_count();
      out.extremal.clear();
    }
    if (g.edge_count() == out.ex) out.extremal.insert(key);
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration counts") {
  const std::size_t want[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(enumerate_graphs(n).size() == want[n - 1]);
  OracleOptions par;
  par.jobs = 3;
  const auto a = enumerate_graphs(7), b = enumerate_graphs(7, par);
  REQUIRE(a.size() == b.size());
  CHECK(std::equal(a.begin(), a.end(), b.begin()));
  CHECK_THROWS_AS(enumerate_graphs(10), GuardrailError);
  OracleOptions small;
  small.max_order = 5;
  CHECK_THROWS_AS(enumerate_graphs(6, small), GuardrailError);
}

TEST_CASE("enumeration matches permutation dedup") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> mine;
    for (const auto& g : enumerate_graphs(n)) mine.insert(reference::permutation_key(g));
    CHECK(mine == reference::labelled_classes(n));
  }
}

TEST_CASE("ex oracle against the brute-force oracle") {
  const std::vector<ForbiddenFamily> fams{
      ForbiddenFamily({complete(3)}),      ForbiddenFamily({cycle(4)}),
      ForbiddenFamily({path(4)}),          ForbiddenFamily({complete(4)}),
      ForbiddenFamily({star(4)}),          ForbiddenFamily({cycle(5), complete(3)}),
      ForbiddenFamily({matching(4)}),      ForbiddenFamily({disjoint_union(path(3), path(2))})};
  for (const auto& fam : fams)
    for (std::size_t n = 2; n <= 6; ++n) {
      const auto rep = ex_oracle(n, fam);
      const auto brute = brute_ex(n, fam);
      REQUIRE(rep.ex_value == brute.ex);
      std::set<std::uint64_t> mine;
      for (const auto& s : rep.extremal_set) mine.insert(reference::permutation_key(decode_graph6(s)));
      REQUIRE(mine == brute.extremal);
    }
}

TEST_CASE("ex oracle examples") {
  ForbiddenFamily k3({complete(3)});
  auto r5 = ex_oracle(5, k3);
  CHECK(r5.ex_value == 6);
  CHECK(r5.extremal_set == forms({complete_multipartite({2, 3}).graph}));
  for (std::size_t n = 1; n <= 6; ++n) {
    auto r = ex_oracle(n, ForbiddenFamily({complete(2)}));
    CHECK(r.ex_value == 0);
    CHECK(r.extremal_set == forms({empty_graph(n)}));
  }
  ForbiddenFamily k4({complete(4)});
  auto r8 = ex_oracle(8, k4);
  CHECK(r8.ex_value == 21);
  CHECK(r8.extremal_set == forms({turan(8, 3).graph}));

  // reports are free and edge-maximal, with a witness for each non-edge
  for (const auto& fam : {k3, ForbiddenFamily({cycle(4)}), ForbiddenFamily({path(4)})}) {
    auto rep = ex_oracle(7, fam);
    REQUIRE(rep.witnesses.size() == rep.extremal_set.size());
    for (std::size_t i = 0; i < rep.extremal_set.size(); ++i) {
      const Graph g = decode_graph6(rep.extremal_set[i]);
      CHECK(is_free(g, fam));
      CHECK(g.edge_count() == rep.ex_value);
      CHECK(rep.witnesses[i].size() == 21 - g.edge_count());
      for (const auto& w : rep.witnesses[i]) CHECK(contains_subgraph(g.with_edge(w.edge.u, w.edge.v), fam[w.member]));
    }
  }
}

TEST_CASE("spex oracle") {
  ForbiddenFamily k3({complete(3)});
  auto s5 = spex_oracle(5, k3);
  CHECK(s5.extremal_set == forms({complete_multipartite({2, 3}).graph}));
  CHECK(s5.certificate.has_value());
  CHECK(s5.spex_value == doctest::Approx(std::sqrt(6.0)));
  auto s0 = spex_oracle(5, ForbiddenFamily({complete(2)}));
  CHECK(s0.spex_value == 0.0);
  CHECK(s0.extremal_set == forms({empty_graph(5)}));
  CHECK(spex_oracle(8, ForbiddenFamily({complete(4)})).extremal_set == forms({turan(8, 3).graph}));

  // the float filter only prunes; certification decides
  for (const auto& fam : {ForbiddenFamily({cycle(4)}), ForbiddenFamily({path(5)}), ForbiddenFamily({star(4), cycle(3)})}) {
    std::vector<std::string> first;
    for (double tol : {1e-9, 1e-8, 1e-7, 1e-6, 1e-5}) {
      OracleOptions o;
      o.filter_tol = tol;
      auto rep = spex_oracle(7, fam, o);
      if (first.empty()) first = rep.extremal_set;
      REQUIRE(rep.extremal_set == first);
    }
  }
  // P4-free on 4 vertices: triangle (2) beats the star (sqrt 3)
  auto tie = spex_oracle(4, ForbiddenFamily({path(4)}));
  CHECK(tie.extremal_set == forms({disjoint_union(complete(3), empty_graph(1))}));
}

TEST_CASE("restricted search") {
  for (std::size_t n : {5, 8, 13}) {
    auto rep = restricted_ex(n, ForbiddenFamily({complete(3)}), RestrictedSpace{});
    CHECK(rep.restricted);
    CHECK(rep.space.has_value());
    CHECK(rep.extremal_set == forms({turan(n, 2).graph}));
  }

  const auto pk = cx2_package(7, 3);
  RestrictedSpace space;
  space.r = 2;
  space.max_tree_order = 3;
  auto rep = restricted_ex(14, pk.family, space);
  CHECK(rep.ex_value == 53);
  CHECK(rep.extremal_set == forms({pk.h.graph, pk.h_prime.graph}));

  // drifting part sizes admits K_{6,8} with 2P3 u P2 in the larger part
  space.part_slack = 2;
  auto wide = restricted_ex(14, pk.family, space);
  CHECK(wide.ex_value == 53);
  CHECK(wide.extremal_set.size() == 3);
  const auto third = embed_in_part(complete_multipartite({8, 6}), 0,
                                   disjoint_union(copies(2, path(3)), path(2)));
  CHECK(std::find(wide.extremal_set.begin(), wide.extremal_set.end(), canonical_form(third.graph)) != wide.extremal_set.end());

  const auto cx1 = cx1_pair(3, 6, 55);
  RestrictedSpace s1;
  s1.r = 3;
  s1.max_tree_order = 7;
  auto r1 = restricted_ex(55, cx1_family(3, 6, 5), s1);
  CHECK(r1.ex_value == cx1.g.graph.edge_count() + 1);
  CHECK(r1.extremal_set == forms({cx1.h.graph}));

  RestrictedSpace bad;
  bad.edit_budget = 4;
  CHECK_THROWS_AS(restricted_ex(6, ForbiddenFamily({complete(3)}), bad), InvalidArgument);
  bad = {};
  bad.part_slack = 3;
  CHECK_THROWS_AS(restricted_ex(6, ForbiddenFamily({complete(3)}), bad), InvalidArgument);
  CHECK(parse_part_policy("largest") == PartPolicy::Largest);
  CHECK_THROWS_AS(parse_part_policy("middle"), InvalidArgument);
}

TEST_CASE("restricted value never exceeds the exhaustive value") {
  struct Case {
    ForbiddenFamily fam;
    std::size_t r, t;
  };
  const std::vector<Case> cases{{ForbiddenFamily({complete(3)}), 2, 1},
                                {ForbiddenFamily({complete(4)}), 3, 2},
                                {cx2_family(3), 2, 3},
                                {ForbiddenFamily({complete(4), disjoint_union(path(3), path(2))}), 3, 3}};
  for (const auto& c : cases)
    for (std::size_t n = 6; n <= 8; ++n) {
      RestrictedSpace s;
      s.r = c.r;
      s.max_tree_order = c.t;
      for (std::size_t budget = 0; budget <= 1; ++budget) {
        s.edit_budget = budget;
        REQUIRE(restricted_ex(n, c.fam, s).ex_value <= ex_oracle(n, c.fam).ex_value);
      }
    }
}
