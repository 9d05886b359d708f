#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// Finite list of forbidden patterns, each with at least one edge.
class ForbiddenFamily {
 public:
  ForbiddenFamily(std::vector<Graph> members, std::vector<std::string> names = {});

  const std::vector<Graph>& members() const noexcept { return members_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Graph& operator[](std::size_t i) const { return members_[i]; }
  std::size_t chi_min() const noexcept { return chi_min_; }
  std::size_t max_order() const noexcept { return max_order_; }

 private:
  std::vector<Graph> members_;
  std::vector<std::string> names_;
  std::size_t chi_min_ = 0;
  std::size_t max_order_ = 0;
};

/// Non-induced subgraph containment. Returns an injection pattern -> host if one exists.
std::optional<std::vector<Vertex>> find_embedding(const Graph& host, const Graph& pattern);
bool contains_subgraph(const Graph& host, const Graph& pattern);

/// Index of the first member contained in host, if any.
std::optional<std::size_t> first_contained(const Graph& host, const ForbiddenFamily& family);
bool is_free(const Graph& host, const ForbiddenFamily& family);

std::size_t clique_number(const Graph& g);
std::size_t chromatic_number(const Graph& g);
std::size_t family_chi(const ForbiddenFamily& family);

}  // namespace spexlab
