#include "spexlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "spexlab/canonical.hpp"
#include "spexlab/error.hpp"
#include "spexlab/graph6.hpp"

namespace spexlab {

Graph f1() {
  // a b c d e f g h i, read off the drawing
  enum : Vertex { a, b, c, d, e, f, g, h, i };
  const std::vector<Edge> es = {
      {a, b}, {a, c}, {a, d}, {a, e}, {a, f}, {a, g}, {a, h}, {a, i},  //
      {b, c}, {b, f}, {b, g}, {c, f}, {f, g}, {c, d}, {c, h},          //
      {g, d}, {g, h}, {d, e}, {d, i}, {e, h}, {e, i}, {h, i},
  };
  return Graph(9, es);
}

std::vector<Graph> trees(std::size_t k) {
  if (k == 0) throw InvalidArgument("trees: need k >= 1");
  std::map<std::string, Graph> level{{canonical_form(Graph(1)), Graph(1)}};
  for (std::size_t order = 2; order <= k; ++order) {
    std::map<std::string, Graph> next;
    for (const auto& [form, t] : level)
      for (Vertex v = 0; v < t.order(); ++v) {
        GraphBuilder b(disjoint_union(t, Graph(1)));
        b.add_edge(v, t.order());
        Graph child = std::move(b).build();
        next.emplace(canonical_form(child), canonical_graph(child));
      }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [form, t] : level) out.push_back(t);
  return out;
}

bool is_path_graph(const Graph& g) {
  if (g.order() == 0 || g.edge_count() + 1 != g.order() || !g.connected()) return false;
  return g.max_degree() <= 2;
}

bool is_star_graph(const Graph& g) {
  if (g.order() == 0 || g.edge_count() + 1 != g.order()) return false;
  return g.order() <= 2 || g.max_degree() == g.order() - 1;
}

ForbiddenFamily cx1_family(std::size_t r, std::size_t k, std::size_t m) {
  if (r < 3) throw InvalidArgument("cx1_family: need r >= 3");
  if (k < 2) throw InvalidArgument("cx1_family: need k >= 2");
  if (m < std::max<std::size_t>(2, k - 1)) throw InvalidArgument("cx1_family: need m >= max(2, k-1)");
  const Graph side = turan(m * (r - 1), r - 1).graph;
  const std::string tag = "+T" + std::to_string(m * (r - 1)) + "," + std::to_string(r - 1);
  std::vector<Graph> members;
  std::vector<std::string> names;
  auto add = [&](const Graph& f, const std::string& name) {
    members.push_back(join(f, side));
    names.push_back(name + tag);
  };
  for (const auto& t : trees(k))
    if (!is_star_graph(t) && !is_path_graph(t)) add(t, "(1)tree:" + encode_graph6(t));
  for (const auto& t : trees(k + 1))
    if (!is_path_graph(t)) add(t, "(2)tree:" + encode_graph6(t));
  add(copies(2, path(k + 1)), "(3)2P" + std::to_string(k + 1));
  add(disjoint_union(star(k), path(k + 1)), "(4)K1," + std::to_string(k - 1) + "uP" + std::to_string(k + 1));
  for (std::size_t l = 3; l <= k + 1; ++l) add(cycle(l), "(5)C" + std::to_string(l));
  members.push_back(complete(r + 2));
  names.push_back("(6)K" + std::to_string(r + 2));
  return ForbiddenFamily(std::move(members), std::move(names));
}

Cx1Pair cx1_pair(std::size_t r, std::size_t k, std::size_t n) {
  if (r < 2 || k < 2 || n < r) throw InvalidArgument("cx1_pair: need r >= 2, k >= 2, n >= r");
  if (n % r == 0) throw InvalidArgument("cx1_pair: need n not divisible by r");
  if ((n / r) % k != 0) throw InvalidArgument("cx1_pair: need floor(n/r) divisible by k");
  const std::size_t small = n / r, large = small + 1;
  const PartitionedGraph base = turan(n, r);
  Cx1Pair out;
  out.path_part = 0;
  out.star_part = n % r;  // larger parts come first
  out.g = embed_in_part(base, out.star_part, u_packing(star(k), small));
  const std::size_t paths = large / k;  // = small / k, one vertex left over
  Graph inner = disjoint_union(path(k + 1), copies(paths - 1, path(k)));
  inner = disjoint_union(inner, Graph(large - inner.order()));
  out.h = embed_in_part(base, out.path_part, inner);
  if (out.h.graph.edge_count() != out.g.graph.edge_count() + 1)
    throw InvalidArgument("cx1_pair: edge surplus is not exactly one");
  return out;
}

ForbiddenFamily cx2_family(std::size_t m) {
  if (m < 2) throw InvalidArgument("cx2_family: need m >= 2");
  const Graph iso(m);
  return ForbiddenFamily({complete(4), join(path(4), iso), join(star(4), iso)},
                         {"K4", "P4+" + std::to_string(m) + "K1", "K1,3+" + std::to_string(m) + "K1"});
}

namespace {

// classes of a bipartite host with P3/P2 pieces embedded in `part`
Partition forest_classes(const PartitionedGraph& pg, std::size_t part, std::size_t paths3, std::size_t p2,
                         std::size_t isolated) {
  std::vector<Vertex> verts = pg.partition[part];
  std::sort(verts.begin(), verts.end());
  std::vector<Vertex> centers, ends, extra;
  std::size_t i = 0;
  for (std::size_t t = 0; t < paths3; ++t, i += 3) {
    ends.push_back(verts[i]);
    centers.push_back(verts[i + 1]);
    ends.push_back(verts[i + 2]);
  }
  for (std::size_t t = 0; t < 2 * p2 + isolated; ++t) extra.push_back(verts[i++]);
  std::vector<std::vector<Vertex>> cls{centers, ends};
  if (!extra.empty()) cls.push_back(extra);
  cls.push_back(pg.partition[1 - part]);
  return Partition(pg.graph.order(), std::move(cls));
}

}  // namespace

Cx2Package cx2_package(std::size_t p, std::size_t m) {
  if (p < 7 || p % 3 != 1) throw InvalidArgument("cx2_package: need p >= 7 and p = 1 mod 3");
  Cx2Package out{p, m, cx2_family(m), {}, {}, {}, Partition(), Partition(), Partition()};
  const std::size_t t = (p - 1) / 3;
  out.g = embed_in_part(complete_multipartite({p + 1, p - 1}), 1, u_packing(path(3), p - 1));
  out.g_eq = forest_classes(out.g, 1, t, 0, 0);
  const PartitionedGraph kpp = complete_multipartite({p, p});
  out.h = embed_in_part(kpp, 0, u_packing(path(3), p));
  out.h_eq = forest_classes(out.h, 0, t, 0, 1);
  const Graph inner = disjoint_union(u_packing(path(3), p - 4), copies(2, path(2)));
  out.h_prime = embed_in_part(kpp, 0, inner);
  out.h_prime_eq = forest_classes(out.h_prime, 0, (p - 4) / 3, 2, 0);
  return out;
}

StarPathPair star_path_pair(std::size_t n, std::size_t r, std::size_t k) {
  if (k < 4) throw InvalidArgument("star_path_pair: need k >= 4");
  if (r == 0 || n % r != 0) throw InvalidArgument("star_path_pair: need r | n");
  if ((n / r) % k != 0) throw InvalidArgument("star_path_pair: need k | n/r");
  const PartitionedGraph base = turan(n, r);
  return {embed_in_part(base, 0, u_packing(star(k), n / r)), embed_in_part(base, 0, u_packing(path(k), n / r))};
}

}  // namespace spexlab
