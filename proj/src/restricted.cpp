#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <set>

#include "spexlab/canonical.hpp"
#include "spexlab/constructions.hpp"
#include "spexlab/error.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/oracle.hpp"
#include "spexlab/parallel.hpp"

namespace spexlab {

std::pair<std::size_t, std::size_t> restricted_part_range(std::size_t n, std::size_t r, std::size_t slack) {
  if (r == 0 || r > n) throw InvalidArgument("restricted space: need 1 <= r <= n");
  const std::size_t fl = n / r, ce = (n + r - 1) / r;
  // ceil(n/r - s) and floor(n/r + s) in integers
  const std::size_t lo_s = n >= slack * r ? (n - slack * r + r - 1) / r : 0;
  const std::size_t hi_s = (n + slack * r) / r;
  return {std::max<std::size_t>(1, std::min(fl, lo_s)), std::max(ce, hi_s)};
}

namespace {

struct Combo {
  std::vector<std::size_t> profile;  // nonincreasing
  std::size_t part = 0;              // index into profile
  std::size_t components = 0;
  std::size_t total = 0;             // edges of every graph built from this combo
};

void profiles(std::size_t left, std::size_t slots, std::size_t lo, std::size_t hi, std::vector<std::size_t>& cur,
              std::vector<std::vector<std::size_t>>& out) {
  if (slots == 0) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (std::size_t s = std::min(hi, left); s >= lo && s >= 1; --s) {
    if (s * slots < left) break;
    if (lo * (slots - 1) > left - s) continue;
    cur.push_back(s);
    profiles(left - s, slots - 1, lo, s, cur, out);
    cur.pop_back();
  }
}

// integer partitions of s into exactly c parts, each <= cap, nonincreasing
void size_partitions(std::size_t s, std::size_t c, std::size_t cap, std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
  if (c == 0) {
    if (s == 0) out.push_back(cur);
    return;
  }
  for (std::size_t t = std::min(cap, s - (c - 1)); t >= 1; --t) {
    if (t * c < s) break;
    cur.push_back(t);
    size_partitions(s - t, c - 1, t, cur, out);
    cur.pop_back();
  }
}

// every forest whose component orders are `sizes` (nonincreasing)
void forests(const std::vector<std::size_t>& sizes, const std::map<std::size_t, std::vector<Graph>>& census,
             std::size_t at, std::size_t min_index, Graph acc, std::vector<Graph>& out) {
  if (at == sizes.size()) {
    out.push_back(std::move(acc));
    return;
  }
  const auto& kinds = census.at(sizes[at]);
  const bool same_as_prev = at > 0 && sizes[at - 1] == sizes[at];
  for (std::size_t t = same_as_prev ? min_index : 0; t < kinds.size(); ++t)
    forests(sizes, census, at + 1, t, disjoint_union(acc, kinds[t]), out);
}

std::size_t multipartite_edges(const std::vector<std::size_t>& profile, std::size_t n) {
  std::size_t inside = 0;
  for (std::size_t s : profile) inside += s * (s - 1) / 2;
  return n * (n - 1) / 2 - inside;
}

}  // namespace

ExtremalReport restricted_ex(std::size_t n, const ForbiddenFamily& family, const RestrictedSpace& space,
                             const OracleOptions& opt, const std::string& family_id) {
  const auto t0 = std::chrono::steady_clock::now();
  if (space.max_tree_order == 0) throw InvalidArgument("restricted space: max_tree_order must be >= 1");
  if (space.part_slack > 2) throw InvalidArgument("restricted space: part slack is capped at 2");
  if (space.edit_budget > 3) throw InvalidArgument("restricted space: edit budget is capped at 3");
  const auto [lo, hi] = restricted_part_range(n, space.r, space.part_slack);

  std::vector<std::vector<std::size_t>> profs;
  std::vector<std::size_t> cur;
  profiles(n, space.r, lo, hi, cur, profs);

  std::vector<Combo> combos;
  for (const auto& prof : profs) {
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < prof.size(); ++i) {
      if (!seen.insert(prof[i]).second) continue;  // equal parts are interchangeable
      if (space.policy == PartPolicy::Largest && prof[i] != prof.front()) continue;
      if (space.policy == PartPolicy::Smallest && prof[i] != prof.back()) continue;
      const std::size_t s = prof[i];
      const std::size_t cmin = (s + space.max_tree_order - 1) / space.max_tree_order;
      for (std::size_t c = cmin; c <= s; ++c)
        combos.push_back({prof, i, c, multipartite_edges(prof, n) + s - c});
    }
  }
  std::stable_sort(combos.begin(), combos.end(), [](const Combo& a, const Combo& b) { return a.total > b.total; });

  std::map<std::size_t, std::vector<Graph>> census;
  for (std::size_t t = 1; t <= space.max_tree_order; ++t) census[t] = trees(t);

  ExtremalReport rep;
  rep.kind = ReportKind::RestrictedEx;
  rep.n = n;
  rep.family_id = family_id;
  rep.restricted = true;
  rep.space = space;

  long best = -1;
  std::set<std::string> winners;
  std::mutex mu;
  auto offer = [&](const Graph& g) {
    const long e = static_cast<long>(g.edge_count());
    std::lock_guard lock(mu);
    if (e < best) return;
    if (e > best) {
      best = e;
      winners.clear();
    }
    winners.insert(canonical_form(g));
  };

  // edits: toggle up to `budget` pairs (strictly increasing pair index)
  std::vector<Edge> pairs;
  if (space.edit_budget > 0)
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::function<void(const Graph&, std::size_t, std::size_t)> edits = [&](const Graph& g, std::size_t from,
                                                                           std::size_t left) {
    for (std::size_t i = from; i < pairs.size(); ++i) {
      const auto [u, v] = pairs[i];
      Graph t = g.adjacent(u, v) ? g.without_edge(u, v) : g.with_edge(u, v);
      if (is_free(t, family)) offer(t);
      if (left > 1) edits(t, i + 1, left - 1);
    }
  };

  std::size_t i = 0;
  while (i < combos.size()) {
    const std::size_t total = combos[i].total;
    if (best >= 0 && static_cast<long>(total + space.edit_budget) < best) break;
    std::vector<Graph> batch;
    for (; i < combos.size() && combos[i].total == total; ++i) {
      const Combo& cb = combos[i];
      const std::size_t s = cb.profile[cb.part];
      std::vector<std::vector<std::size_t>> shapes;
      std::vector<std::size_t> tmp;
      size_partitions(s, cb.components, space.max_tree_order, tmp, shapes);
      const PartitionedGraph base = complete_multipartite(cb.profile);
      for (const auto& shape : shapes) {
        std::vector<Graph> fs;
        forests(shape, census, 0, 0, Graph(0), fs);
        for (const auto& f : fs) batch.push_back(embed_in_part(base, cb.part, f).graph);
      }
    }
    rep.candidates += batch.size();
    parallel_for(batch.size(), opt.jobs, [&](std::size_t k) {
      if (is_free(batch[k], family)) offer(batch[k]);
      if (space.edit_budget > 0) edits(batch[k], 0, space.edit_budget);
    });
    if (space.edit_budget == 0 && best >= 0) break;
  }
  if (best >= 0) rep.ex_value = static_cast<std::size_t>(best);
  rep.extremal_set.assign(winners.begin(), winners.end());
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace spexlab
