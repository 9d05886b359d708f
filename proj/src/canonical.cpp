#include "spexlab/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spexlab/graph6.hpp"

namespace spexlab {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()), stride_((g.order() + 63) / 64), twin_(n_) {
    // twin ids: equal open or equal closed neighbourhoods
    std::map<std::vector<std::uint64_t>, std::size_t> open, closed;
    for (Vertex v = 0; v < n_; ++v) {
      std::vector<std::uint64_t> r(g.row(v).begin(), g.row(v).end());
      auto [it, fresh] = open.try_emplace(r, v);
      if (!fresh) {
        twin_[v] = twin_[it->second];
        continue;
      }
      r[v >> 6] |= std::uint64_t{1} << (v & 63);
      auto [jt, fresh2] = closed.try_emplace(r, v);
      twin_[v] = fresh2 ? v : twin_[jt->second];
    }
  }

  CanonicalLabeling run() {
    if (n_ > 0) {
      Cells start(1);
      start[0].resize(n_);
      std::iota(start[0].begin(), start[0].end(), Vertex{0});
      descend(std::move(start));
    }
    CanonicalLabeling out;
    out.label.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) out.label[best_order_[i]] = i;
    out.form = encode_graph6(g_.relabel(out.label));
    return out;
  }

 private:
  void refine(Cells& cells) const {
    Bitset mask(n_);
    std::vector<std::pair<std::size_t, Vertex>> keyed;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        mask = Bitset(n_);
        for (Vertex v : cells[s]) mask.set(v);
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() == 1) continue;
          keyed.clear();
          for (Vertex v : cells[c]) keyed.emplace_back(and_count(g_.row(v), mask.words()), v);
          bool uniform = std::all_of(keyed.begin(), keyed.end(),
                                     [&](const auto& kv) { return kv.first == keyed.front().first; });
          if (uniform) continue;
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          Cells parts;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.emplace_back();
            parts.back().push_back(keyed[i].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<std::uint64_t> certificate(const std::vector<Vertex>& order) const {
    std::vector<Vertex> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order[i]] = i;
    std::vector<std::uint64_t> cert(n_ * stride_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (Vertex x : g_.neighbor_list(order[i])) cert[i * stride_ + (pos[x] >> 6)] |= std::uint64_t{1} << (pos[x] & 63);
    return cert;
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> order(n_);
    for (std::size_t i = 0; i < n_; ++i) order[i] = cells[i][0];
    auto cert = certificate(order);
    if (best_cert_.empty() || cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
    } else if (cert == best_cert_) {
      std::vector<Vertex> gamma(n_);
      bool identity = true;
      for (std::size_t i = 0; i < n_; ++i) {
        gamma[best_order_[i]] = order[i];
        identity = identity && best_order_[i] == order[i];
      }
      if (!identity && gens_.size() < 256) gens_.push_back(std::move(gamma));
    }
  }

  // orbit representative of v under stored automorphisms fixing the prefix
  std::vector<Vertex> orbits() const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gmm : gens_) {
      bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](Vertex p) { return gmm[p] == p; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        Vertex a = find(v), b = find(gmm[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void descend(Cells cells) {
    refine(cells);
    if (cells.size() == n_) {
      leaf(cells);
      return;
    }
    std::size_t t = 0;
    while (cells[t].size() == 1) ++t;
    std::vector<Vertex> target = cells[t];
    std::sort(target.begin(), target.end());
    std::vector<Vertex> tried;
    for (Vertex v : target) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return twin_[w] == twin_[v]; })) continue;
      if (!tried.empty() && !gens_.empty()) {
        auto orb = orbits();
        if (std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return orb[w] == orb[v]; })) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != t) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex x : cells[c])
          if (x != v) rest.push_back(x);
        child.push_back(std::move(rest));
      }
      prefix_.push_back(v);
      descend(std::move(child));
      prefix_.pop_back();
      tried.push_back(v);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t stride_;
  std::vector<Vertex> twin_;
  std::vector<std::uint64_t> best_cert_;
  std::vector<Vertex> best_order_;
  std::vector<std::vector<Vertex>> gens_;
  std::vector<Vertex> prefix_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Search(g).run(); }

std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) { return decode_graph6(canonical_form(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  return da == db && canonical_form(a) == canonical_form(b);
}

}  // namespace spexlab
