#pragma once

#include <cstddef>
#include <vector>

#include "spexlab/graph.hpp"
#include "spexlab/patterns.hpp"

namespace spexlab {

/// Nine vertices a..i = 0..8; a is universal.
Graph f1();
inline constexpr Vertex kF1Apex = 0;

/// All trees on k vertices up to isomorphism, ordered by canonical form.
std::vector<Graph> trees(std::size_t k);
bool is_path_graph(const Graph& g);
bool is_star_graph(const Graph& g);

/// Family (1)-(6) of the large-extremal-number counterexample.
ForbiddenFamily cx1_family(std::size_t r, std::size_t k, std::size_t m);

struct Cx1Pair {
  PartitionedGraph g;  // stars in the first small part
  PartitionedGraph h;  // paths in the first large part, first path extended
  std::size_t star_part = 0;
  std::size_t path_part = 0;
};
Cx1Pair cx1_pair(std::size_t r, std::size_t k, std::size_t n);

struct Cx2Package {
  std::size_t p = 0, m = 0;
  ForbiddenFamily family;
  PartitionedGraph g, h, h_prime;  // bipartitions
  Partition g_eq, h_eq, h_prime_eq;  // equitable refinements used for the quotients
};
Cx2Package cx2_package(std::size_t p, std::size_t m);
ForbiddenFamily cx2_family(std::size_t m);

struct StarPathPair {
  PartitionedGraph star;
  PartitionedGraph path;
};
StarPathPair star_path_pair(std::size_t n, std::size_t r, std::size_t k);

}  // namespace spexlab
