#include "spexlab/reference.hpp"

#include <algorithm>
#include <numeric>

#include "spexlab/error.hpp"

namespace spexlab::reference {

namespace {

bool extend(const Graph& host, const Graph& pattern, std::vector<Vertex>& map, std::vector<char>& used) {
  const std::size_t k = map.size();
  if (k == pattern.order()) {
    for (const auto& e : pattern.edges())
      if (!host.adjacent(map[e.u], map[e.v])) return false;
    return true;
  }
  for (Vertex h = 0; h < host.order(); ++h) {
    if (used[h]) continue;
    used[h] = 1;
    map.push_back(h);
    if (extend(host, pattern, map, used)) return true;
    map.pop_back();
    used[h] = 0;
  }
  return false;
}

std::uint64_t key_under(const Graph& g, const std::vector<Vertex>& perm) {
  // bit index follows pairs (i, j), i < j, in row order of the relabeled graph
  const std::size_t n = g.order();
  std::vector<Vertex> inv(n);
  for (Vertex v = 0; v < n; ++v) inv[perm[v]] = v;
  std::uint64_t key = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) key = (key << 1) | (g.adjacent(inv[i], inv[j]) ? 1u : 0u);
  return key;
}

}  // namespace

bool contains_by_injection(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order()) return false;
  std::vector<Vertex> map;
  std::vector<char> used(host.order(), 0);
  return extend(host, pattern, map, used);
}

std::size_t chromatic_by_assignment(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  const auto edges = g.edges();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> col(n, 0);
    while (true) {
      bool ok = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return col[e.u] != col[e.v]; });
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

std::uint64_t permutation_key(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 8) throw InvalidArgument("permutation_key: n <= 8 only");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, key_under(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph from_key(std::size_t n, std::uint64_t key) {
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  GraphBuilder b(n);
  std::size_t pos = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++pos)
      if ((key >> (bits - 1 - pos)) & 1u) b.add_edge(i, j);
  return std::move(b).build();
}

std::set<std::uint64_t> labelled_classes(std::size_t n) {
  if (n > 6) throw InvalidArgument("labelled_classes: n <= 6 only");
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  std::set<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) out.insert(permutation_key(from_key(n, mask)));
  return out;
}

}  // namespace spexlab::reference
