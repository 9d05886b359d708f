#include "spexlab/rational.hpp"

#include <algorithm>
#include <sstream>

#include "spexlab/error.hpp"

namespace spexlab {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw InvalidArgument("not a rational number: " + text);
  q.canonicalize();
  return q;
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw InvalidArgument("rational matrix: not square");
    for (long v : r) a_.emplace_back(v);
  }
}

bool RationalMatrix::nonnegative() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return sgn(x) >= 0; });
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void RationalPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational RationalPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> d = c_;
  const Rational lead = c_.back();
  for (auto& x : d) x /= lead;
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> d = c_;
  for (auto& x : d) x = -x;
  return RationalPoly(std::move(d));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
  return RationalPoly(std::move(d));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> d(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  return RationalPoly(std::move(d));
}

std::string RationalPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& x = c_[i];
    if (sgn(x) == 0) continue;
    Rational mag = abs(x);
    if (!first) os << (sgn(x) < 0 ? " - " : " + ");
    else if (sgn(x) < 0) os << "-";
    first = false;
    const bool unit = mag == 1;
    if (!unit || i == 0) os << spexlab::to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RationalPoly poly_rem(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw InvalidArgument("poly_rem: division by zero polynomial");
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  while (r.size() > db) {
    if (sgn(r.back()) == 0) {
      r.pop_back();
      continue;
    }
    const Rational f = r.back() / bc.back();
    const std::size_t shift = r.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= f * bc[i];
    r.pop_back();
  }
  return RationalPoly(std::move(r));
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPoly char_poly(const RationalMatrix& m) {
  const std::size_t n = m.order();
  // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix M(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l)
          if (sgn(m(i, l)) != 0 && sgn(M(l, j)) != 0) s += m(i, l) * M(l, j);
        if (i == j) s += c[n - k + 1];
        next(i, j) = s;
      }
    M = std::move(next);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += m(i, l) * M(l, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return RationalPoly(std::move(c));
}

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
  std::vector<RationalPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  RationalPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    RationalPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {

std::size_t sign_changes(const std::vector<RationalPoly>& chain, const Rational& x) {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& q : chain) {
    const int s = sgn(q(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::size_t count_roots(const std::vector<RationalPoly>& chain, const Rational& a, const Rational& b) {
  if (chain.empty()) return 0;
  if (!(a < b)) throw InvalidArgument("count_roots: need a < b");
  if (sgn(chain[0](a)) == 0 || sgn(chain[0](b)) == 0) throw InvalidArgument("count_roots: endpoint is a root");
  return sign_changes(chain, a) - sign_changes(chain, b);
}

Rational root_bound(const RationalPoly& p) {
  if (p.degree() < 1) return 1;
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) m = std::max(m, Rational(abs(p.coeffs()[i] / p.leading())));
  return m + 1;
}

}  // namespace spexlab
