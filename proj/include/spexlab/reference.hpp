#pragma once

// Deliberately naive reference implementations. They share nothing with the
// fast paths besides the Graph container and are only meant for small inputs.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab::reference {

/// Tries every injection V(pattern) -> V(host).
bool contains_by_injection(const Graph& host, const Graph& pattern);
/// Smallest k admitting a proper colouring, by trying all k^n assignments.
std::size_t chromatic_by_assignment(const Graph& g);
/// Minimum adjacency bit string over all n! relabelings (n <= 8).
std::uint64_t permutation_key(const Graph& g);
/// Isomorphism classes of all labelled graphs on n vertices, as permutation keys (n <= 6).
std::set<std::uint64_t> labelled_classes(std::size_t n);
/// Graph with the given key and order.
Graph from_key(std::size_t n, std::uint64_t key);

}  // namespace spexlab::reference
