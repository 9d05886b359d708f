#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spexlab/bitset.hpp"

namespace spexlab {

using Vertex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphBuilder;

/// Immutable simple undirected graph stored as adjacency bit rows.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }
  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (adj_[u * stride_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::size_t degree(Vertex v) const noexcept { return deg_[v]; }
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {adj_.data() + v * stride_, stride_};
  }
  Bitset neighbors(Vertex v) const { return Bitset(n_, row(v)); }
  std::vector<Vertex> neighbor_list(Vertex v) const;
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const { return deg_; }
  std::size_t max_degree() const noexcept;

  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabel(std::span<const Vertex> perm) const;
  Graph induced(std::span<const Vertex> vertices) const;
  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  Graph without_vertex(Vertex v) const;
  Graph complement() const;

  /// Connected components, each sorted ascending, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const;
  bool connected() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::size_t> deg_;
};

/// Mutable staging area; `build()` freezes it into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& g);
  std::size_t order() const noexcept { return g_.n_; }
  bool adjacent(Vertex u, Vertex v) const noexcept { return g_.adjacent(u, v); }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void clear_vertex(Vertex v);
  Graph build() &&;
  Graph build() const&;

 private:
  void set_bit(Vertex u, Vertex v, bool on);
  Graph g_;
};

/// Ordered list of disjoint nonempty vertex classes covering {0..n-1}.
class Partition {
 public:
  Partition() = default;
  Partition(std::size_t n, std::vector<std::vector<Vertex>> classes);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<Vertex>& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<std::vector<Vertex>>& classes() const noexcept { return classes_; }
  std::vector<std::size_t> sizes() const;
  std::size_t class_of(Vertex v) const { return owner_[v]; }

  static Partition singletons(std::size_t n);
  static Partition blocks(std::span<const std::size_t> sizes);

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> classes_;
  std::vector<std::size_t> owner_;
};

struct PartitionedGraph {
  Graph graph;
  Partition partition;
};

// complete multipartite families
PartitionedGraph turan(std::size_t n, std::size_t r);
PartitionedGraph complete_multipartite(std::span<const std::size_t> sizes);
inline PartitionedGraph complete_multipartite(std::initializer_list<std::size_t> sizes) {
  return complete_multipartite(std::span<const std::size_t>(sizes.begin(), sizes.size()));
}
std::size_t turan_edges(std::size_t n, std::size_t r);

Graph path(std::size_t l);
Graph cycle(std::size_t l);
Graph star(std::size_t k);  // K_{1,k-1}
Graph matching(std::size_t n);
Graph complete(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path_power(std::size_t l, std::size_t p);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph copies(std::size_t k, const Graph& g);
Graph u_packing(const Graph& g, std::size_t n);

PartitionedGraph embed_in_part(const PartitionedGraph& base, std::size_t part, const Graph& inner);
PartitionedGraph transfer_vertex(const Graph& g, const Partition& partition, std::size_t i, std::size_t j,
                                 Vertex u);
Graph kelmans(const Graph& g, Vertex u, Vertex v);

std::uint64_t count_walks2(const Graph& g, Vertex v);
std::uint64_t total_walks2(const Graph& g);

}  // namespace spexlab
