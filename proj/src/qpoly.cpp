#include "newtonpoly/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace newtonpoly {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational QPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double QPoly::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

QPoly QPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1;
  for (const auto& c : c_) den = lcm(den, c.get_den());
  std::vector<Integer> ints;
  Integer content = 0;
  for (const auto& c : c_) {
    Integer v = c.get_num() * (den / c.get_den());
    ints.push_back(v);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  if (sgn(leading()) < 0) content = -content;
  std::vector<Rational> out;
  for (const auto& v : ints) out.emplace_back(Integer(v / content));
  return QPoly(std::move(out));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(out));
}

QPoly operator*(QPoly a, const Rational& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {QPoly(), a};
  std::vector<Rational> quot(da - db + 1, Rational(0));
  Rational inv = 1 / b.leading();
  for (int k = da - db; k >= 0; --k) {
    Rational f = rem[k + db] * inv;
    quot[k] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a;
  QPoly y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    // Keep intermediate coefficients small.
    y = r.is_zero() ? r : r.primitive();
  }
  return x.monic();
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() < 1) return out;
  QPoly fm = f.monic();
  QPoly d = fm.derivative();
  QPoly a = gcd(fm, d);
  QPoly b = divmod(fm, a).first;
  QPoly c = divmod(d, a).first;
  QPoly e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly g = gcd(b, e);
    if (g.degree() > 0) out.emplace_back(g, i);
    QPoly nb = divmod(b, g).first;
    c = divmod(e, g).first;
    b = std::move(nb);
    e = c - b.derivative();
    ++i;
  }
  return out;
}

SturmChain::SturmChain(const QPoly& f) {
  if (f.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  chain_.push_back(f);
  QPoly d = f.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d);
  while (true) {
    QPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern.
    QPoly p = r.primitive();
    if (sgn(r.leading()) > 0) p = p * Rational(-1);
    chain_.push_back(p);
  }
}

int SturmChain::variations(const Rational& x) const {
  int count = 0;
  int prev = 0;
  for (const auto& p : chain_) {
    int s = sgn(p(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int SturmChain::count(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

Rational root_bound(const QPoly& f) {
  Rational m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rational r = abs(f.coeffs()[i] / f.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

void isolate(const SturmChain& chain, const Rational& lo, const Rational& hi, int n,
             std::vector<IsolatedRoot>& out) {
  if (n == 0) return;
  if (n == 1) {
    IsolatedRoot r{lo, hi};
    if (sgn(chain.poly()(hi)) == 0) r.lo = hi;
    out.push_back(r);
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = chain.count(lo, mid);
  isolate(chain, lo, mid, left, out);
  isolate(chain, mid, hi, n - left, out);
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const QPoly& f) {
  std::vector<IsolatedRoot> out;
  if (f.degree() < 1) return out;
  SturmChain chain(f);
  Rational b = root_bound(f);
  isolate(chain, -b, b, chain.count(-b, b), out);
  Rational width(Integer(1), Integer("1000000000000"));
  for (auto& r : out) {
    refine_root(chain, r, width);
    r.approx = Rational((r.lo + r.hi) / 2).get_d();
  }
  return out;
}

void refine_root(const SturmChain& chain, IsolatedRoot& root, const Rational& width) {
  while (!root.exact() && root.hi - root.lo > width) {
    Rational mid = (root.lo + root.hi) / 2;
    if (sgn(chain.poly()(mid)) == 0) {
      root.lo = root.hi = mid;
    } else if (chain.count(root.lo, mid) == 1) {
      root.hi = mid;
    } else {
      root.lo = mid;
    }
  }
  if (!root.exact() && sgn(chain.poly()(root.hi)) == 0) root.lo = root.hi;
}

std::optional<Rational> rational_root_value(const QPoly& f, IsolatedRoot root) {
  if (root.exact()) return root.lo;
  QPoly prim = f.primitive();
  // A rational root N/D in lowest terms has D | L, so L*root is an integer.
  Rational lead = abs(prim.leading());
  SturmChain chain(prim);
  refine_root(chain, root, Rational(1, 4) / lead);
  if (root.exact()) return root.lo;
  Rational scaled = lead * (root.lo + root.hi) / 2;
  Integer nearest = floor(scaled + Rational(1, 2));
  Rational candidate = Rational(nearest) / lead;
  if (candidate > root.lo && candidate <= root.hi && sgn(prim(candidate)) == 0) return candidate;
  return std::nullopt;
}

}  // namespace newtonpoly
