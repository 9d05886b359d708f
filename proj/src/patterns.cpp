#include "spexlab/patterns.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "spexlab/error.hpp"

namespace spexlab {

ForbiddenFamily::ForbiddenFamily(std::vector<Graph> members, std::vector<std::string> names)
    : members_(std::move(members)), names_(std::move(names)) {
  if (members_.empty()) throw InvalidArgument("forbidden family: no members");
  if (names_.empty())
    for (std::size_t i = 0; i < members_.size(); ++i) names_.push_back("F" + std::to_string(i));
  if (names_.size() != members_.size()) throw InvalidArgument("forbidden family: name count mismatch");
  chi_min_ = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].edge_count() == 0)
      throw InvalidArgument("forbidden family: member " + names_[i] + " has no edges");
    chi_min_ = std::min(chi_min_, chromatic_number(members_[i]));
    max_order_ = std::max(max_order_, members_[i].order());
  }
}

namespace {

// Backtracking matcher. Pattern vertices are mapped in a fixed order; each
// unmapped pattern vertex keeps a candidate set that shrinks as neighbours get
// mapped. Twins on either side are only tried in one canonical arrangement.
class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern) : H_(host), P_(pattern), k_(pattern.order()) {
    stride_ = (H_.order() + 63) / 64;
  }

  std::optional<std::vector<Vertex>> run() {
    if (k_ == 0) return std::vector<Vertex>{};
    if (k_ > H_.order() || P_.edge_count() > H_.edge_count()) return std::nullopt;
    auto hd = H_.degrees(), pd = P_.degrees();
    std::sort(hd.rbegin(), hd.rend());
    std::sort(pd.rbegin(), pd.rend());
    for (std::size_t i = 0; i < k_; ++i)
      if (pd[i] > hd[i]) return std::nullopt;

    // isolated pattern vertices go anywhere afterwards
    std::vector<Vertex> active;
    for (Vertex v = 0; v < k_; ++v)
      if (P_.degree(v) > 0) active.push_back(v);
    build_order(active);
    build_host_classes();
    build_pattern_twins();

    const std::size_t depth = order_.size();
    dom_.assign((depth + 1) * depth * stride_, 0);
    img_.assign(depth, 0);
    used_ = Bitset(H_.order());
    for (std::size_t q = 0; q < depth; ++q) {
      auto* d = slot(0, q);
      for (Vertex h = 0; h < H_.order(); ++h)
        if (H_.degree(h) >= P_.degree(order_[q])) d[h >> 6] |= std::uint64_t{1} << (h & 63);
      if (std::all_of(d, d + stride_, [](std::uint64_t w) { return w == 0; })) return std::nullopt;
    }
    if (!descend(0)) return std::nullopt;

    std::vector<Vertex> phi(k_, 0);
    for (std::size_t i = 0; i < depth; ++i) phi[order_[i]] = img_[i];
    Vertex next = 0;
    for (Vertex v = 0; v < k_; ++v) {
      if (P_.degree(v) > 0) continue;
      while (used_.test(next)) ++next;
      phi[v] = next;
      used_.set(next);
    }
    return phi;
  }

 private:
  std::uint64_t* slot(std::size_t level, std::size_t q) { return dom_.data() + (level * order_.size() + q) * stride_; }

  void build_order(const std::vector<Vertex>& active) {
    std::vector<char> placed(k_, 0);
    std::vector<std::size_t> links(k_, 0);
    for (std::size_t step = 0; step < active.size(); ++step) {
      Vertex best = 0;
      bool have = false;
      for (Vertex v : active) {
        if (placed[v]) continue;
        if (!have || links[v] > links[best] || (links[v] == links[best] && P_.degree(v) > P_.degree(best))) {
          best = v;
          have = true;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
      for (Vertex x : P_.neighbor_list(best)) ++links[x];
    }
    pos_.assign(k_, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = i;
    later_.assign(order_.size(), {});
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (Vertex x : P_.neighbor_list(order_[i]))
        if (pos_[x] > i) later_[i].push_back(pos_[x]);
  }

  // classes of host vertices with identical open or closed neighbourhoods
  void build_host_classes() {
    const std::size_t n = H_.order();
    hclass_.assign(n, 0);
    std::map<std::vector<std::uint64_t>, std::size_t> open, closed;
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::uint64_t> r(H_.row(v).begin(), H_.row(v).end());
      std::size_t id;
      if (auto it = open.find(r); it != open.end()) {
        id = it->second;
      } else {
        auto rc = r;
        rc[v >> 6] |= std::uint64_t{1} << (v & 63);
        if (auto jt = closed.find(rc); jt != closed.end()) {
          id = jt->second;
        } else {
          id = members_.size();
          members_.emplace_back();
          open.emplace(r, id);
          closed.emplace(rc, id);
        }
      }
      hclass_[v] = id;
      members_[id].push_back(v);
    }
    used_in_.assign(members_.size(), 0);
  }

  void build_pattern_twins() {
    twin_pred_.assign(order_.size(), static_cast<std::size_t>(-1));
    const std::size_t pstride = (k_ + 63) / 64;
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (std::size_t j = i; j-- > 0;) {
        Vertex a = order_[i], b = order_[j];
        auto ra = P_.row(a), rb = P_.row(b);
        bool open = std::equal(ra.begin(), ra.end(), rb.begin());
        bool closed = true;
        for (std::size_t w = 0; w < pstride && closed; ++w) {
          std::uint64_t xa = ra[w], xb = rb[w];
          if ((a >> 6) == w) xa |= std::uint64_t{1} << (a & 63);
          if ((b >> 6) == w) xb |= std::uint64_t{1} << (b & 63);
          closed = xa == xb;
        }
        if (open || closed) {
          twin_pred_[i] = j;
          break;
        }
      }
  }

  bool descend(std::size_t d) {
    const std::size_t depth = order_.size();
    if (d == depth) return true;
    const std::uint64_t* cand = slot(d, d);
    const std::size_t need = later_[d].size();
    for (std::size_t wi = 0; wi < stride_; ++wi) {
      std::uint64_t w = cand[wi];
      while (w) {
        const Vertex h = wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
        w &= w - 1;
        const std::size_t c = hclass_[h];
        if (members_[c][used_in_[c]] != h) continue;
        if (twin_pred_[d] != static_cast<std::size_t>(-1) && h < img_[twin_pred_[d]]) continue;
        if (need) {
          std::size_t free_nbrs = 0;
          auto row = H_.row(h);
          for (std::size_t x = 0; x < stride_; ++x)
            free_nbrs += static_cast<std::size_t>(std::popcount(row[x] & ~used_.words()[x]));
          if (free_nbrs < need) continue;
        }
        if (!propagate(d, h)) continue;
        img_[d] = h;
        used_.set(h);
        ++used_in_[c];
        if (descend(d + 1)) return true;
        --used_in_[c];
        used_.reset(h);
      }
    }
    return false;
  }

  bool propagate(std::size_t d, Vertex h) {
    const std::size_t depth = order_.size();
    const auto row = H_.row(h);
    const std::uint64_t hw = std::uint64_t{1} << (h & 63);
    std::vector<char>& adj = adj_scratch_;
    adj.assign(depth, 0);
    for (std::size_t q : later_[d]) adj[q] = 1;
    for (std::size_t q = d + 1; q < depth; ++q) {
      const std::uint64_t* src = slot(d, q);
      std::uint64_t* dst = slot(d + 1, q);
      std::uint64_t any = 0;
      for (std::size_t x = 0; x < stride_; ++x) {
        std::uint64_t v = src[x];
        if (adj[q]) v &= row[x];
        if (x == (h >> 6)) v &= ~hw;
        dst[x] = v;
        any |= v;
      }
      if (!any) return false;
    }
    // Hall-type check: no set of pattern vertices squeezed into fewer hosts
    for (std::size_t q = d + 1; q < depth; ++q) {
      const std::uint64_t* dq = slot(d + 1, q);
      std::size_t size = 0;
      for (std::size_t x = 0; x < stride_; ++x) size += static_cast<std::size_t>(std::popcount(dq[x]));
      if (size >= depth - d - 1) continue;
      std::size_t inside = 0;
      for (std::size_t r = d + 1; r < depth; ++r) {
        const std::uint64_t* dr = slot(d + 1, r);
        bool sub = true;
        for (std::size_t x = 0; x < stride_ && sub; ++x) sub = (dr[x] & ~dq[x]) == 0;
        if (sub && ++inside > size) return false;
      }
    }
    return true;
  }

  const Graph& H_;
  const Graph& P_;
  std::size_t k_;
  std::size_t stride_ = 0;
  std::vector<Vertex> order_;
  std::vector<std::size_t> pos_;
  std::vector<std::vector<std::size_t>> later_;
  std::vector<std::size_t> twin_pred_;
  std::vector<std::size_t> hclass_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<std::size_t> used_in_;
  std::vector<std::uint64_t> dom_;
  std::vector<Vertex> img_;
  Bitset used_;
  std::vector<char> adj_scratch_;
};

// Bron–Kerbosch with pivoting on bitsets.
void max_clique(const Graph& g, std::size_t size, Bitset p, Bitset x, std::size_t& best) {
  if (p.none()) {
    best = std::max(best, size);
    return;
  }
  if (size + p.count() <= best) return;
  std::size_t pivot = (p | x).find_first(), pivot_deg = 0;
  (p | x).for_each([&](std::size_t u) {
    std::size_t c = and_count(p.words(), g.row(u));
    if (c >= pivot_deg) {
      pivot_deg = c;
      pivot = u;
    }
  });
  Bitset cand = p;
  cand.subtract(g.row(pivot));
  cand.for_each([&](std::size_t v) {
    Bitset np = p, nx = x;
    np &= g.row(v);
    nx &= g.row(v);
    max_clique(g, size + 1, np, nx, best);
    p.reset(v);
    x.set(v);
  });
}

class Colorer {
 public:
  explicit Colorer(const Graph& g) : g_(g), n_(g.order()), color_(n_, -1), forbid_(n_, 0) {}

  std::size_t solve(std::size_t lower, std::size_t upper) {
    best_ = upper;
    lower_ = lower;
    if (best_ > lower_) search(0, 0);
    return best_;
  }

 private:
  void search(std::size_t colored, std::size_t used) {
    if (best_ == lower_) return;
    if (colored == n_) {
      best_ = std::min(best_, used);
      return;
    }
    // DSATUR choice
    Vertex v = 0;
    int best_sat = -1;
    std::size_t best_deg = 0;
    for (Vertex u = 0; u < n_; ++u) {
      if (color_[u] >= 0) continue;
      int sat = std::popcount(forbid_[u]);
      if (sat > best_sat || (sat == best_sat && g_.degree(u) > best_deg)) {
        v = u;
        best_sat = sat;
        best_deg = g_.degree(u);
      }
    }
    const std::size_t limit = std::min(used + 1, best_ - 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (forbid_[v] >> c & 1u) continue;
      std::vector<Vertex> touched;
      for (Vertex x : g_.neighbor_list(v))
        if (color_[x] < 0 && !(forbid_[x] >> c & 1u)) {
          forbid_[x] |= std::uint64_t{1} << c;
          touched.push_back(x);
        }
      color_[v] = static_cast<int>(c);
      search(colored + 1, std::max(used, c + 1));
      color_[v] = -1;
      for (Vertex x : touched) forbid_[x] &= ~(std::uint64_t{1} << c);
      if (best_ == lower_) return;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<int> color_;
  std::vector<std::uint64_t> forbid_;
  std::size_t best_ = 0;
  std::size_t lower_ = 0;
};

std::size_t greedy_dsatur(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);
  std::vector<Bitset> seen(n, Bitset(n + 1));
  std::size_t used = 0;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex v = 0;
    std::size_t bs = 0, bd = 0;
    bool have = false;
    for (Vertex u = 0; u < n; ++u) {
      if (color[u] >= 0) continue;
      std::size_t s = seen[u].count();
      if (!have || s > bs || (s == bs && g.degree(u) > bd)) {
        v = u;
        bs = s;
        bd = g.degree(u);
        have = true;
      }
    }
    std::size_t c = 0;
    while (seen[v].test(c)) ++c;
    color[v] = static_cast<int>(c);
    used = std::max(used, c + 1);
    for (Vertex x : g.neighbor_list(v)) seen[x].set(c);
  }
  return used;
}

}  // namespace

std::optional<std::vector<Vertex>> find_embedding(const Graph& host, const Graph& pattern) {
  return Matcher(host, pattern).run();
}

bool contains_subgraph(const Graph& host, const Graph& pattern) { return find_embedding(host, pattern).has_value(); }

std::optional<std::size_t> first_contained(const Graph& host, const ForbiddenFamily& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    if (contains_subgraph(host, family[i])) return i;
  return std::nullopt;
}

bool is_free(const Graph& host, const ForbiddenFamily& family) { return !first_contained(host, family).has_value(); }

std::size_t clique_number(const Graph& g) {
  if (g.order() == 0) return 0;
  std::size_t best = 0;
  max_clique(g, 0, Bitset::full(g.order()), Bitset(g.order()), best);
  return best;
}

std::size_t chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  if (g.order() > 64) throw InvalidArgument("chromatic_number: exact search limited to 64 vertices");
  const std::size_t lower = clique_number(g);
  const std::size_t upper = greedy_dsatur(g);
  if (lower == upper) return lower;
  return Colorer(g).solve(lower, upper);
}

std::size_t family_chi(const ForbiddenFamily& family) { return family.chi_min(); }

}  // namespace spexlab
