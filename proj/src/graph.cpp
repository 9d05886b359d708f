#include "spexlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "spexlab/error.hpp"

namespace spexlab {

namespace {

void check_vertex(std::size_t n, Vertex v, const char* what) {
  if (v >= n) throw InvalidArgument(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), stride_((n + 63) / 64), adj_(n * stride_, 0), deg_(n, 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  *this = std::move(b).build();
}

std::vector<Vertex> Graph::neighbor_list(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(deg_[v]);
  const auto r = row(v);
  for (std::size_t wi = 0; wi < stride_; ++wi) {
    std::uint64_t w = r[wi];
    while (w) {
      out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbor_list(u))
      if (u < v) out.push_back({u, v});
  return out;
}

std::size_t Graph::max_degree() const noexcept {
  return deg_.empty() ? 0 : *std::max_element(deg_.begin(), deg_.end());
}

Graph Graph::relabel(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw InvalidArgument("relabel: permutation size mismatch");
  std::vector<char> seen(n_, 0);
  for (Vertex p : perm) {
    check_vertex(n_, p, "relabel");
    if (seen[p]++) throw InvalidArgument("relabel: not a permutation");
  }
  GraphBuilder b(n_);
  for (const auto& e : edges()) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  GraphBuilder b(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(n_, vertices[i], "induced");
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
  }
  return std::move(b).build();
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  GraphBuilder b(*this);
  b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  GraphBuilder b(*this);
  b.remove_edge(u, v);
  return std::move(b).build();
}

Graph Graph::without_vertex(Vertex v) const {
  check_vertex(n_, v, "without_vertex");
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Graph Graph::complement() const {
  GraphBuilder b(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : neighbor_list(x))
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return n_ <= 1 || components().size() == 1; }

GraphBuilder::GraphBuilder(std::size_t n) : g_(n) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::set_bit(Vertex u, Vertex v, bool on) {
  auto& w = g_.adj_[u * g_.stride_ + (v >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (on)
    w |= bit;
  else
    w &= ~bit;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_vertex(g_.n_, u, "add_edge");
  check_vertex(g_.n_, v, "add_edge");
  if (u == v) throw InvalidArgument("add_edge: self-loop at " + std::to_string(u));
  if (g_.adjacent(u, v)) return;
  set_bit(u, v, true);
  set_bit(v, u, true);
  ++g_.deg_[u];
  ++g_.deg_[v];
  ++g_.m_;
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_vertex(g_.n_, u, "remove_edge");
  check_vertex(g_.n_, v, "remove_edge");
  if (u == v || !g_.adjacent(u, v)) return;
  set_bit(u, v, false);
  set_bit(v, u, false);
  --g_.deg_[u];
  --g_.deg_[v];
  --g_.m_;
}

void GraphBuilder::clear_vertex(Vertex v) {
  check_vertex(g_.n_, v, "clear_vertex");
  for (Vertex x : g_.neighbor_list(v)) remove_edge(v, x);
}

Graph GraphBuilder::build() && { return std::move(g_); }
Graph GraphBuilder::build() const& { return g_; }

Partition::Partition(std::size_t n, std::vector<std::vector<Vertex>> classes)
    : n_(n), classes_(std::move(classes)), owner_(n, static_cast<std::size_t>(-1)) {
  std::size_t covered = 0;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (classes_[c].empty()) throw InvalidArgument("partition: class " + std::to_string(c) + " is empty");
    for (Vertex v : classes_[c]) {
      check_vertex(n, v, "partition");
      if (owner_[v] != static_cast<std::size_t>(-1))
        throw InvalidArgument("partition: vertex " + std::to_string(v) + " in two classes");
      owner_[v] = c;
      ++covered;
    }
  }
  if (covered != n) throw InvalidArgument("partition: classes do not cover all vertices");
}

std::vector<std::size_t> Partition::sizes() const {
  std::vector<std::size_t> s;
  for (const auto& c : classes_) s.push_back(c.size());
  return s;
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::vector<Vertex>> cls(n);
  for (Vertex v = 0; v < n; ++v) cls[v] = {v};
  return Partition(n, std::move(cls));
}

Partition Partition::blocks(std::span<const std::size_t> sizes) {
  std::vector<std::vector<Vertex>> cls;
  Vertex next = 0;
  for (std::size_t s : sizes) {
    std::vector<Vertex> c(s);
    std::iota(c.begin(), c.end(), next);
    next += s;
    cls.push_back(std::move(c));
  }
  return Partition(next, std::move(cls));
}

PartitionedGraph complete_multipartite(std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw InvalidArgument("complete_multipartite: no parts");
  for (std::size_t s : sizes)
    if (s == 0) throw InvalidArgument("complete_multipartite: empty part");
  Partition p = Partition::blocks(sizes);
  GraphBuilder b(p.order());
  for (Vertex u = 0; u < p.order(); ++u)
    for (Vertex v = u + 1; v < p.order(); ++v)
      if (p.class_of(u) != p.class_of(v)) b.add_edge(u, v);
  return {std::move(b).build(), std::move(p)};
}

PartitionedGraph turan(std::size_t n, std::size_t r) {
  if (r == 0 || r > n) throw InvalidArgument("turan: need 1 <= r <= n");
  std::vector<std::size_t> sizes(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) ++sizes[i];  // larger parts first
  return complete_multipartite(sizes);
}

std::size_t turan_edges(std::size_t n, std::size_t r) {
  if (r == 0 || r > n) throw InvalidArgument("turan_edges: need 1 <= r <= n");
  std::size_t inside = 0;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t s = n / r + (i < n % r ? 1 : 0);
    inside += s * (s - 1) / 2;
  }
  return n * (n - 1) / 2 - inside;
}

Graph path(std::size_t l) {
  if (l == 0) throw InvalidArgument("path: need at least one vertex");
  GraphBuilder b(l);
  for (Vertex i = 0; i + 1 < l; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph cycle(std::size_t l) {
  if (l < 3) throw InvalidArgument("cycle: need at least three vertices");
  GraphBuilder b(l);
  for (Vertex i = 0; i < l; ++i) b.add_edge(i, (i + 1) % l);
  return std::move(b).build();
}

Graph star(std::size_t k) {
  if (k == 0) throw InvalidArgument("star: need k >= 1");
  GraphBuilder b(k);
  for (Vertex i = 1; i < k; ++i) b.add_edge(0, i);
  return std::move(b).build();
}

Graph matching(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; i += 2) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path_power(std::size_t l, std::size_t p) {
  if (l == 0) throw InvalidArgument("path_power: need at least one vertex");
  GraphBuilder b(l);
  for (Vertex u = 0; u < l; ++u)
    for (Vertex v = u + 1; v < l && v - u <= p; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t off = g.order();
  GraphBuilder b(off + h.order());
  for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
  for (const auto& e : h.edges()) b.add_edge(e.u + off, e.v + off);
  return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h) {
  const std::size_t off = g.order();
  GraphBuilder b(disjoint_union(g, h));
  for (Vertex u = 0; u < off; ++u)
    for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, v + off);
  return std::move(b).build();
}

Graph copies(std::size_t k, const Graph& g) {
  const std::size_t s = g.order();
  GraphBuilder b(k * s);
  const auto es = g.edges();
  for (std::size_t c = 0; c < k; ++c)
    for (const auto& e : es) b.add_edge(c * s + e.u, c * s + e.v);
  return std::move(b).build();
}

Graph u_packing(const Graph& g, std::size_t n) {
  if (g.order() == 0) throw InvalidArgument("u_packing: pattern has no vertices");
  return disjoint_union(copies(n / g.order(), g), Graph(n % g.order()));
}

PartitionedGraph embed_in_part(const PartitionedGraph& base, std::size_t part, const Graph& inner) {
  if (part >= base.partition.size()) throw InvalidArgument("embed_in_part: part index out of range");
  auto verts = base.partition[part];
  std::sort(verts.begin(), verts.end());
  if (verts.size() != inner.order())
    throw InvalidArgument("embed_in_part: inner graph has " + std::to_string(inner.order()) +
                          " vertices, part has " + std::to_string(verts.size()));
  GraphBuilder b(base.graph);
  for (const auto& e : inner.edges()) b.add_edge(verts[e.u], verts[e.v]);
  return {std::move(b).build(), base.partition};
}

PartitionedGraph transfer_vertex(const Graph& g, const Partition& partition, std::size_t i, std::size_t j,
                                 Vertex u) {
  if (partition.order() != g.order()) throw InvalidArgument("transfer_vertex: partition does not match graph");
  if (i >= partition.size() || j >= partition.size() || i == j)
    throw InvalidArgument("transfer_vertex: need distinct valid class indices");
  check_vertex(g.order(), u, "transfer_vertex");
  if (partition.class_of(u) != i)
    throw InvalidArgument("transfer_vertex: vertex " + std::to_string(u) + " is not in class " + std::to_string(i));
  std::size_t inside = 0;
  for (Vertex x : partition[i])
    if (g.adjacent(u, x)) ++inside;
  if (inside > 1) throw InvalidArgument("transfer_vertex: vertex has more than one neighbor inside its class");
  if (partition[i].size() == 1) throw InvalidArgument("transfer_vertex: class would become empty");

  GraphBuilder b(g);
  b.clear_vertex(u);
  for (Vertex x = 0; x < g.order(); ++x)
    if (x != u && partition.class_of(x) != j) b.add_edge(u, x);

  auto cls = partition.classes();
  std::erase(cls[i], u);
  cls[j].push_back(u);
  std::sort(cls[j].begin(), cls[j].end());
  return {std::move(b).build(), Partition(g.order(), std::move(cls))};
}

Graph kelmans(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g.order(), u, "kelmans");
  check_vertex(g.order(), v, "kelmans");
  if (u == v) throw InvalidArgument("kelmans: need u != v");
  GraphBuilder b(g);
  for (Vertex x : g.neighbor_list(v)) {
    if (x == u || g.adjacent(u, x)) continue;
    b.remove_edge(v, x);
    b.add_edge(u, x);
  }
  return std::move(b).build();
}

std::uint64_t count_walks2(const Graph& g, Vertex v) {
  check_vertex(g.order(), v, "count_walks2");
  std::uint64_t s = 0;
  for (Vertex x : g.neighbor_list(v)) s += g.degree(x);
  return s;
}

std::uint64_t total_walks2(const Graph& g) {
  std::uint64_t s = 0;
  for (Vertex v = 0; v < g.order(); ++v) s += static_cast<std::uint64_t>(g.degree(v)) * g.degree(v);
  return s;
}

}  // namespace spexlab
