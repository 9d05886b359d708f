#include "spexlab/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <set>

#include "spexlab/canonical.hpp"
#include "spexlab/error.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/parallel.hpp"

namespace spexlab {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void check_guardrail(std::size_t n, const OracleOptions& opt) {
  if (n > opt.max_order && !opt.allow_large)
    throw GuardrailError("enumeration of n = " + std::to_string(n) + " exceeds the guardrail n <= " +
                         std::to_string(opt.max_order) + "; pass the override to proceed");
}

}  // namespace

std::vector<Graph> enumerate_graphs(std::size_t n, const OracleOptions& opt,
                                    const std::function<bool(const Graph&)>& keep) {
  check_guardrail(n, opt);
  std::vector<Graph> out;
  Graph empty(n);
  if (keep && !keep(empty)) return out;
  std::vector<std::string> level{canonical_form(empty)};
  out.push_back(decode_graph6(level.front()));
  while (!level.empty()) {
    // children of every parent, deduplicated by canonical form
    std::vector<std::set<std::string>> shards(std::max<std::size_t>(1, opt.jobs));
    std::vector<std::mutex> locks(shards.size());
    parallel_for(level.size(), opt.jobs, [&](std::size_t i) {
      const Graph g = decode_graph6(level[i]);
      std::vector<std::string> local;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (!g.adjacent(u, v)) local.push_back(canonical_form(g.with_edge(u, v)));
      auto& shard = shards[i % shards.size()];
      std::lock_guard lock(locks[i % shards.size()]);
      shard.insert(local.begin(), local.end());
    });
    std::set<std::string> merged;
    for (auto& s : shards) merged.merge(s);
    std::vector<std::string> next(merged.begin(), merged.end());
    if (keep) {
      std::vector<char> ok(next.size(), 0);
      parallel_for(next.size(), opt.jobs, [&](std::size_t i) { ok[i] = keep(decode_graph6(next[i])) ? 1 : 0; });
      std::vector<std::string> kept;
      for (std::size_t i = 0; i < next.size(); ++i)
        if (ok[i]) kept.push_back(std::move(next[i]));
      next = std::move(kept);
    }
    for (const auto& s : next) out.push_back(decode_graph6(s));
    level = std::move(next);
  }
  return out;
}

std::string to_string(PartPolicy p) {
  switch (p) {
    case PartPolicy::Any: return "any";
    case PartPolicy::Largest: return "largest";
    case PartPolicy::Smallest: return "smallest";
  }
  return "any";
}

PartPolicy parse_part_policy(const std::string& s) {
  if (s == "any") return PartPolicy::Any;
  if (s == "largest") return PartPolicy::Largest;
  if (s == "smallest") return PartPolicy::Smallest;
  throw InvalidArgument("unknown part policy: " + s);
}

namespace {

std::vector<Graph> free_graphs(std::size_t n, const ForbiddenFamily& family, const OracleOptions& opt) {
  return enumerate_graphs(n, opt, [&](const Graph& g) { return is_free(g, family); });
}

}  // namespace

ExtremalReport ex_oracle(std::size_t n, const ForbiddenFamily& family, const OracleOptions& opt,
                         const std::string& family_id) {
  const auto t0 = std::chrono::steady_clock::now();
  ExtremalReport rep;
  rep.kind = ReportKind::Ex;
  rep.n = n;
  rep.family_id = family_id;
  const auto graphs = free_graphs(n, family, opt);
  rep.candidates = graphs.size();
  for (const auto& g : graphs) rep.ex_value = std::max(rep.ex_value, g.edge_count());
  std::vector<Graph> ext;
  for (const auto& g : graphs)
    if (g.edge_count() == rep.ex_value) ext.push_back(g);
  std::sort(ext.begin(), ext.end(),
            [](const Graph& a, const Graph& b) { return encode_graph6(a) < encode_graph6(b); });
  rep.witnesses.resize(ext.size());
  parallel_for(ext.size(), opt.jobs, [&](std::size_t i) {
    const Graph& g = ext[i];
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        auto hit = first_contained(g.with_edge(u, v), family);
        if (!hit) throw std::logic_error("ex_oracle: extremal graph is not edge-maximal");
        rep.witnesses[i].push_back({{u, v}, *hit});
      }
  });
  for (const auto& g : ext) rep.extremal_set.push_back(encode_graph6(g));
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

ExtremalReport spex_oracle(std::size_t n, const ForbiddenFamily& family, const OracleOptions& opt,
                           const std::string& family_id) {
  const auto t0 = std::chrono::steady_clock::now();
  ExtremalReport rep;
  rep.kind = ReportKind::Spex;
  rep.n = n;
  rep.family_id = family_id;
  const auto graphs = free_graphs(n, family, opt);
  rep.candidates = graphs.size();
  std::vector<double> lam(graphs.size());
  parallel_for(graphs.size(), opt.jobs,
               [&](std::size_t i) { lam[i] = spectral_radius(graphs[i], opt.spectral_tol).lambda; });
  const double top = *std::max_element(lam.begin(), lam.end());
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (lam[i] >= top - opt.filter_tol) survivors.push_back(i);
  // exact maximum among survivors; ties only on exact equality
  std::size_t best = survivors.front();
  for (std::size_t i : survivors)
    if (compare_lambda_exact(graphs[i], graphs[best]) == std::strong_ordering::greater) best = i;
  std::vector<std::string> set;
  for (std::size_t i : survivors)
    if (i == best || compare_lambda_exact(graphs[i], graphs[best]) == std::strong_ordering::equal)
      set.push_back(encode_graph6(graphs[i]));
  std::sort(set.begin(), set.end());
  rep.extremal_set = std::move(set);
  rep.spex_value = lam[best];
  rep.ex_value = graphs[best].edge_count();
  rep.certificate = perron_certificate(graphs[best]);
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

}  // namespace spexlab
