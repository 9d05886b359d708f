#include "spexlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "spexlab/error.hpp"

namespace spexlab {

namespace {

struct ComponentResult {
  long double lambda = 0;
  std::vector<long double> x;
  long double residual = 0;
  std::size_t iterations = 0;
};

ComponentResult iterate_component(const std::vector<std::vector<std::size_t>>& adj, double tol, std::size_t max_iter,
                                  std::size_t& budget_used) {
  const std::size_t m = adj.size();
  ComponentResult out;
  out.x.assign(m, 1.0L);
  std::vector<long double> y(m);
  while (true) {
    long double num = 0, den = 0;
    for (std::size_t i = 0; i < m; ++i) {
      long double s = 0;
      for (std::size_t j : adj[i]) s += out.x[j];
      y[i] = s;
      num += out.x[i] * s;
      den += out.x[i] * out.x[i];
    }
    out.lambda = num / den;
    long double res = 0;
    for (std::size_t i = 0; i < m; ++i) res = std::max(res, std::fabs(y[i] - out.lambda * out.x[i]));
    out.residual = res;
    if (res <= tol) return out;
    if (budget_used + out.iterations >= max_iter) {
      budget_used += out.iterations;
      SpectralResult best;
      best.lambda = static_cast<double>(out.lambda);
      best.residual = static_cast<double>(res);
      best.iterations = budget_used;
      for (auto v : out.x) best.eigvec.push_back(static_cast<double>(v));
      throw ConvergenceError("spectral_radius: iteration cap reached, residual " + std::to_string(best.residual),
                             std::move(best));
    }
    long double mx = 0;
    for (std::size_t i = 0; i < m; ++i) {
      y[i] += out.x[i];  // shift by I so bipartite components converge
      mx = std::max(mx, y[i]);
    }
    for (std::size_t i = 0; i < m; ++i) out.x[i] = y[i] / mx;
    ++out.iterations;
  }
}

// lo <= rho < hi maintained; mid <= 0 can never exceed rho
bool rho_below(const RationalMatrix& a, const Rational& q) { return sgn(q) > 0 && perron_less_than(a, q); }

Rational max_row_sum(const RationalMatrix& m) {
  Rational best = 0;
  for (std::size_t i = 0; i < m.order(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.order(); ++j) s += m(i, j);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol, std::size_t max_iter) {
  if (!(tol > 0)) throw InvalidArgument("spectral_radius: tolerance must be positive");
  SpectralResult res;
  const std::size_t n = g.order();
  if (g.edge_count() == 0) {
    res.eigvec.assign(n, 0.0);
    return res;
  }
  std::size_t used = 0;
  bool have = false;
  ComponentResult best;
  std::vector<std::size_t> best_verts;
  std::vector<std::size_t> local(n);
  for (const auto& comp : g.components()) {
    if (comp.size() < 2) continue;
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
    std::vector<std::vector<std::size_t>> adj(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex y : g.neighbor_list(comp[i])) adj[i].push_back(local[y]);
    ComponentResult cr = iterate_component(adj, tol, max_iter, used);
    used += cr.iterations;
    if (!have || cr.lambda > best.lambda) {
      best = std::move(cr);
      best_verts = comp;
      have = true;
    }
  }
  res.lambda = static_cast<double>(best.lambda);
  res.residual = static_cast<double>(best.residual);
  res.iterations = used;
  res.eigvec.assign(n, 0.0);
  for (std::size_t i = 0; i < best_verts.size(); ++i) res.eigvec[best_verts[i]] = static_cast<double>(best.x[i]);
  return res;
}

double eigen_residual(const Graph& g, double lambda, const std::vector<double>& x) {
  if (x.size() != g.order()) throw InvalidArgument("eigen_residual: vector size mismatch");
  long double res = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    long double s = 0;
    for (Vertex y : g.neighbor_list(v)) s += x[y];
    res = std::max(res, std::fabs(s - static_cast<long double>(lambda) * x[v]));
  }
  return static_cast<double>(res);
}

namespace {

// first (u, v, class) witnessing inequitability, if any
struct Violation {
  Vertex u, v;
  std::size_t target;
};

std::optional<Violation> find_violation(const Graph& g, const Partition& p, std::vector<std::vector<long>>* counts) {
  if (p.order() != g.order()) throw InvalidArgument("partition does not cover the graph");
  std::vector<Bitset> masks;
  for (const auto& c : p.classes()) {
    Bitset b(g.order());
    for (Vertex v : c) b.set(v);
    masks.push_back(std::move(b));
  }
  if (counts) counts->assign(p.size(), std::vector<long>(p.size(), 0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      const Vertex first = p[i].front();
      const std::size_t ref = and_count(g.row(first), masks[j].words());
      for (Vertex v : p[i])
        if (and_count(g.row(v), masks[j].words()) != ref) return Violation{first, v, j};
      if (counts) (*counts)[i][j] = static_cast<long>(ref);
    }
  return std::nullopt;
}

}  // namespace

bool is_equitable(const Graph& g, const Partition& p) { return !find_violation(g, p, nullptr).has_value(); }

RationalMatrix quotient_matrix(const Graph& g, const Partition& p) {
  std::vector<std::vector<long>> counts;
  if (auto bad = find_violation(g, p, &counts))
    throw InvalidArgument("quotient_matrix: partition not equitable: vertices " + std::to_string(bad->u) + " and " +
                          std::to_string(bad->v) + " differ on class " + std::to_string(bad->target));
  RationalMatrix m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) m(i, j) = counts[i][j];
  return m;
}

RationalMatrix adjacency_matrix(const Graph& g) {
  RationalMatrix m(g.order());
  for (const auto& e : g.edges()) m(e.u, e.v) = m(e.v, e.u) = 1;
  return m;
}

bool perron_less_than(const RationalMatrix& m, const Rational& q) {
  if (!m.nonnegative()) throw InvalidArgument("perron_less_than: matrix has a negative entry");
  if (sgn(q) <= 0) throw InvalidArgument("perron_less_than: threshold must be positive");
  const std::size_t n = m.order();
  if (n == 0) return true;
  // clear denominators of qI - m; positive scaling keeps minor signs
  Integer l = 1;
  auto absorb = [&](const Rational& x) { mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t()); };
  absorb(q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) absorb(m(i, j));
  std::vector<Integer> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = (i == j ? q : Rational(0)) - m(i, j);
      x *= l;
      a[i * n + j] = x.get_num();  // integral after scaling
    }
  // Bareiss: after step k the pivot a[k][k] is the (k+1)-th leading minor
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer pivot = a[k * n + k];
    if (sgn(pivot) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = pivot * a[i * n + j] - a[i * n + k] * a[k * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = t;
      }
    }
    prev = pivot;
  }
  return true;
}

std::pair<Rational, Rational> perron_bracket(const RationalMatrix& m, const Rational& width) {
  if (sgn(width) <= 0) throw InvalidArgument("perron_bracket: width must be positive");
  Rational lo = 0, hi = max_row_sum(m) + 1;
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (rho_below(m, mid))
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

PerronCertificate perron_certificate(const Graph& g) {
  PerronCertificate c;
  c.char_poly = char_poly(adjacency_matrix(g));
  const auto chain = sturm_chain(c.char_poly);
  const Rational bound = root_bound(c.char_poly);
  c.lo = -bound;
  c.hi = bound;
  while (count_roots(chain, c.lo, c.hi) > 1) {
    Rational mid = (c.lo + c.hi) / 2;
    while (sgn(c.char_poly(mid)) == 0) mid = (mid + c.hi) / 2;
    if (count_roots(chain, mid, c.hi) >= 1)
      c.lo = mid;
    else
      c.hi = mid;
  }
  return c;
}

std::strong_ordering compare_lambda_exact(const Graph& g, const Graph& h) {
  const bool g0 = g.edge_count() == 0, h0 = h.edge_count() == 0;
  if (g0 || h0) {
    if (g0 && h0) return std::strong_ordering::equal;
    return g0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const PerronCertificate cg = perron_certificate(g), ch = perron_certificate(h);
  const RationalPoly d = poly_gcd(cg.char_poly, ch.char_poly);
  if (d.degree() >= 1) {
    const auto chain = sturm_chain(d);
    if (count_roots(chain, cg.lo, cg.hi) >= 1 && count_roots(chain, ch.lo, ch.hi) >= 1)
      return std::strong_ordering::equal;
  }
  // distinct roots: bisect until the brackets separate
  const RationalMatrix ag = adjacency_matrix(g), ah = adjacency_matrix(h);
  Rational glo = cg.lo, ghi = cg.hi, hlo = ch.lo, hhi = ch.hi;
  while (true) {
    if (ghi <= hlo) return std::strong_ordering::less;
    if (hhi <= glo) return std::strong_ordering::greater;
    if (ghi - glo >= hhi - hlo) {
      Rational mid = (glo + ghi) / 2;
      if (rho_below(ag, mid))
        ghi = mid;
      else
        glo = mid;
    } else {
      Rational mid = (hlo + hhi) / 2;
      if (rho_below(ah, mid))
        hhi = mid;
      else
        hlo = mid;
    }
  }
}

}  // namespace spexlab
