#include "spexlab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "spexlab/constructions.hpp"
#include "spexlab/error.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/parallel.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

namespace {

void need_r(std::size_t r) {
  if (r < 3) throw InvalidArgument("thresholds: need r >= 3");
}

Rational b_coeff(std::size_t r) {
  const long rl = static_cast<long>(r);
  return Rational(2) + Rational(5, rl - 1) - Rational(4, rl);
}

Rational c_coeff(std::size_t r) {
  const long rl = static_cast<long>(r);
  return Rational(6, rl - 1) - Rational(4, rl);
}

// f(x) = x^2/(r-1) - B x + C; E(r) is its larger root
Rational quad(std::size_t r, const Rational& x) {
  return x * x / Rational(static_cast<long>(r) - 1) - b_coeff(r) * x + c_coeff(r);
}

Rational floor_q(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

}  // namespace

Interval threshold_expression(std::size_t r) {
  need_r(r);
  const Rational b = b_coeff(r);
  const Rational disc = b * b - Rational(4, static_cast<long>(r) - 1) * c_coeff(r);
  if (sgn(disc) <= 0) throw InvalidArgument("thresholds: nonpositive discriminant");
  const Interval half = Interval::of(Rational(static_cast<long>(r) - 1, 2));
  return half * (Interval::of(b) + sqrt(Interval::of(disc)));
}

std::size_t threshold_ceiling(std::size_t r) {
  const Interval e = threshold_expression(r);
  const double fl = std::floor(e.lo);
  if (std::floor(e.hi) == fl && e.lo > fl) return static_cast<std::size_t>(fl) + 1;
  if (std::floor(e.hi) > fl + 1) throw IntegerBoundaryError("thresholds: enclosure too wide");
  // one integer j inside the enclosure: settle the side exactly
  const long j = static_cast<long>(std::floor(e.hi));
  const Rational vertex = b_coeff(r) * Rational(static_cast<long>(r) - 1, 2);
  const int s = sgn(quad(r, Rational(j)));
  if (s == 0)
    throw IntegerBoundaryError("thresholds: E(" + std::to_string(r) + ") is the integer " + std::to_string(j));
  if (s > 0 && Rational(j) > vertex) return static_cast<std::size_t>(j);
  return static_cast<std::size_t>(j) + 1;
}

Interval c1_enclosure(std::size_t r) {
  const Interval e = threshold_expression(r);
  const Interval one = Interval::point(1.0);
  return (one - one / e) / Interval::point(static_cast<double>(r));
}

double c1(std::size_t r) { return c1_enclosure(r).mid(); }

Rational c_of_r(std::size_t r) {
  const long k = static_cast<long>(threshold_ceiling(r));
  return Rational(k - 1, k * static_cast<long>(r));
}

Thresholds thresholds(std::size_t r) {
  Thresholds t;
  t.r = r;
  t.e = threshold_expression(r);
  t.k = threshold_ceiling(r);
  t.c = c_of_r(r);
  t.c1 = c1_enclosure(r);
  return t;
}

std::size_t k_bound(const Rational& q, std::size_t r) {
  if (r == 0) throw InvalidArgument("k_bound: need r >= 1");
  const Rational qr = q * static_cast<long>(r);
  if (qr >= 1) throw InvalidArgument("k_bound: need Q < 1/r");
  const Rational v = floor_q(Rational(1) / (Rational(1) - qr));
  return static_cast<std::size_t>(v.get_num().get_ui());
}

Rational gap_constant(std::size_t r, std::size_t k) {
  const long rl = static_cast<long>(r), kl = static_cast<long>(k);
  return Rational(2) - (Rational(kl - 5) + Rational(6, kl)) / Rational(rl - 1) - Rational(4 * (kl - 1), kl * rl);
}

FitResult fit_first_order(std::vector<Sample> samples) {
  if (samples.size() < 3) throw InvalidArgument("fit_first_order: need at least three samples");
  std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) { return a.n < b.n; });
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].n == 0) throw InvalidArgument("fit_first_order: n must be positive");
    if (i && samples[i].n == samples[i - 1].n) throw InvalidArgument("fit_first_order: repeated n");
  }
  // f(n) = n*delta = C + D/n; each consecutive pair eliminates D
  std::vector<long double> ext;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const long double n0 = samples[i - 1].n, n1 = samples[i].n;
    const long double f0 = n0 * samples[i - 1].delta, f1 = n1 * samples[i].delta;
    ext.push_back((n1 * f1 - n0 * f0) / (n1 - n0));
  }
  FitResult fr;
  fr.samples = std::move(samples);
  fr.first_order = static_cast<double>(ext.back());
  fr.error_estimate = static_cast<double>(std::fabs(ext.back() - ext[ext.size() - 2]));
  return fr;
}

namespace {

long param(const std::map<std::string, long>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw InvalidArgument("experiment: missing parameter " + key);
  return it->second;
}

std::size_t positive(const std::map<std::string, long>& p, const std::string& key, long min) {
  const long v = param(p, key);
  if (v < min) throw InvalidArgument("experiment: parameter " + key + " must be >= " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

struct Setup {
  std::function<std::pair<Graph, Graph>(std::size_t)> pair;  // (first, second) with delta = l(first) - l(second)
  std::function<bool(std::size_t)> valid;
  std::function<std::vector<std::size_t>(std::size_t)> schedule;
  double predicted;
  std::string formula;
};

std::vector<std::size_t> doubling(std::size_t unit, std::size_t start_at, std::size_t points, std::size_t offset = 0) {
  std::size_t w = unit;
  while (w + offset < start_at) w += unit;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points; ++i, w *= 2) out.push_back(w + offset);
  return out;
}

Setup make_setup(const std::string& name, const std::map<std::string, long>& p) {
  Setup s;
  if (name == "star_vs_path") {
    const std::size_t r = positive(p, "r", 2), k = positive(p, "k", 4);
    s.valid = [=](std::size_t n) { return n % r == 0 && (n / r) % k == 0; };
    s.schedule = [=](std::size_t pts) { return doubling(r * k, 120, pts); };
    s.pair = [=](std::size_t n) {
      auto sp = star_path_pair(n, r, k);
      return std::pair{sp.star.graph, sp.path.graph};
    };
    s.predicted = (static_cast<double>(k) - 5 + 6.0 / static_cast<double>(k)) / static_cast<double>(r - 1);
    s.formula = "(k-5+6/k)/(r-1)";
  } else if (name == "edge_add") {
    const std::size_t r = positive(p, "r", 2), b = positive(p, "b", 0), a = positive(p, "a", 0);
    s.valid = [=](std::size_t n) { return n % r == 0 && n / r >= 2 * (a + b) + 2; };
    s.schedule = [=](std::size_t pts) { return doubling(r, 120, pts); };
    s.pair = [=](std::size_t n) {
      const PartitionedGraph h = turan(n, r);
      GraphBuilder mod(h.graph);
      const auto& p0 = h.partition[0];
      for (std::size_t i = 0; i < b; ++i) mod.add_edge(p0[2 * i], p0[2 * i + 1]);
      // deleted cross edges use vertices untouched by the additions
      const auto& x = h.partition[r >= 3 ? 1 : 0];
      const auto& y = h.partition[r >= 3 ? 2 : 1];
      for (std::size_t i = 0; i < a; ++i) mod.remove_edge(x[x.size() - 1 - i], y[y.size() - 1 - i]);
      return std::pair{std::move(mod).build(), h.graph};
    };
    s.predicted = 2.0 * (static_cast<double>(b) - static_cast<double>(a));
    s.formula = "2(b-a)";
  } else if (name == "transfer_shift") {
    const std::size_t r = positive(p, "r", 2), k = positive(p, "k", 2);
    s.valid = [=](std::size_t n) { return n % r == 1 && (n / r) % k == 0; };
    s.schedule = [=](std::size_t pts) {
      auto ws = doubling(k, (120 + r - 1) / r, pts);
      for (auto& w : ws) w = r * w + 1;
      return ws;
    };
    s.pair = [=](std::size_t n) {
      // paths P_k cover the small part W_1 (index 1); one ordinary vertex of the
      // large part (index 0) moves into W_1
      const PartitionedGraph g = embed_in_part(turan(n, r), 1, u_packing(path(k), n / r));
      const Vertex u = g.partition[0].front();
      const PartitionedGraph moved = transfer_vertex(g.graph, g.partition, 0, 1, u);
      return std::pair{moved.graph, g.graph};
    };
    s.predicted = -4.0 * static_cast<double>(k - 1) / static_cast<double>(k * r);
    s.formula = "-4(k-1)/(kr)";
  } else if (name == "cx1_gap") {
    const std::size_t r = positive(p, "r", 3), k = positive(p, "k", 2);
    s.valid = [=](std::size_t n) { return n % r != 0 && (n / r) % k == 0; };
    s.schedule = [=](std::size_t pts) {
      auto ws = doubling(k, (50 + r - 1) / r, pts);
      for (auto& w : ws) w = r * w + 1;
      return ws;
    };
    s.pair = [=](std::size_t n) {
      auto pr = cx1_pair(r, k, n);
      return std::pair{pr.h.graph, pr.g.graph};
    };
    s.predicted = gap_constant(r, k).get_d();
    s.formula = "2-(k-5+6/k)/(r-1)-4(k-1)/(kr)";
  } else {
    throw InvalidArgument("unknown experiment: " + name);
  }
  return s;
}

}  // namespace

std::vector<std::string> experiment_names() { return {"star_vs_path", "edge_add", "transfer_shift", "cx1_gap"}; }

std::vector<std::size_t> experiment_schedule(const std::string& name, const std::map<std::string, long>& params,
                                             std::size_t points) {
  return make_setup(name, params).schedule(points);
}

FitResult experiment(const std::string& name, const std::map<std::string, long>& params,
                     const ExperimentOptions& opt) {
  const Setup setup = make_setup(name, params);
  std::vector<std::size_t> ns = opt.n_values.empty() ? setup.schedule(opt.points) : opt.n_values;
  std::sort(ns.begin(), ns.end());
  for (std::size_t n : ns)
    if (!setup.valid(n)) throw InvalidArgument(name + ": n = " + std::to_string(n) + " violates the construction's congruences");
  std::vector<Sample> samples(ns.size());
  parallel_for(ns.size(), opt.jobs, [&](std::size_t i) {
    const auto [a, b] = setup.pair(ns[i]);
    const double la = spectral_radius(a, opt.tol).lambda, lb = spectral_radius(b, opt.tol).lambda;
    samples[i] = {ns[i], la - lb};
  });
  FitResult fr = fit_first_order(std::move(samples));
  fr.experiment = name;
  fr.params = params;
  fr.predicted = setup.predicted;
  fr.predicted_formula = setup.formula;
  return fr;
}

}  // namespace spexlab
