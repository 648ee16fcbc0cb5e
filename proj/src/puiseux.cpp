#include "newtonpoly/puiseux.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace newtonpoly {

namespace {

long den_as_long(const Rational& r) {
  if (!r.get_den().fits_slong_p()) throw std::overflow_error("ramification index overflow");
  return r.get_den().get_si();
}

Rational binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

}  // namespace

PuiseuxPoly::PuiseuxPoly(const Rational& constant) {
  add_term(ExponentPair(0, 0), constant);
}

PuiseuxPoly::PuiseuxPoly(std::initializer_list<std::pair<const ExponentPair, Rational>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

PuiseuxPoly::PuiseuxPoly(Terms terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

PuiseuxPoly PuiseuxPoly::monomial(const Rational& coefficient, const Rational& e1, long e2) {
  PuiseuxPoly p;
  p.add_term(ExponentPair(e1, e2), coefficient);
  return p;
}

PuiseuxPoly PuiseuxPoly::variable(Variable v) {
  return v == Variable::x1 ? monomial(1, 1, 0) : monomial(1, 0, 1);
}

void PuiseuxPoly::add_term(const ExponentPair& e, const Rational& c) {
  if (sgn(e.e1) < 0 || e.e2 < 0) throw std::invalid_argument("negative exponent in PuiseuxPoly");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  long den = den_as_long(e.e1);
  ramification_ = std::lcm(ramification_, den);
}

void PuiseuxPoly::refresh_ramification() {
  for (const auto& [e, c] : terms_) ramification_ = std::lcm(ramification_, den_as_long(e.e1));
}

Rational PuiseuxPoly::coefficient(const ExponentPair& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

long PuiseuxPoly::degree_x2() const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.e2);
  return d;
}

Rational PuiseuxPoly::degree_x1() const {
  Rational d = 0;
  for (const auto& [e, c] : terms_) {
    if (e.e1 > d) d = e.e1;
  }
  return d;
}

bool PuiseuxPoly::is_ordinary() const {
  for (const auto& [e, c] : terms_) {
    if (!is_integer(e.e1)) return false;
  }
  return true;
}

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  ramification_ = std::lcm(ramification_, other.ramification_);
  return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, Rational(-c));
  ramification_ = std::lcm(ramification_, other.ramification_);
  return *this;
}

PuiseuxPoly& PuiseuxPoly::operator*=(const PuiseuxPoly& other) {
  PuiseuxPoly out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      out.add_term(ExponentPair(Rational(ea.e1 + eb.e1), ea.e2 + eb.e2), Rational(ca * cb));
    }
  }
  out.ramification_ = std::lcm(ramification_, other.ramification_);
  out.refresh_ramification();
  *this = std::move(out);
  return *this;
}

PuiseuxPoly& PuiseuxPoly::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

PuiseuxPoly PuiseuxPoly::operator-() const {
  PuiseuxPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

PuiseuxPoly pow(const PuiseuxPoly& base, unsigned long exponent) {
  PuiseuxPoly result(Rational(1));
  PuiseuxPoly square = base;
  while (exponent > 0) {
    if (exponent & 1UL) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

PuiseuxPoly substitute_shear(const PuiseuxPoly& phi, const Rational& c, const Rational& a) {
  if (sgn(a) <= 0) throw std::invalid_argument("shear exponent must be positive");
  PuiseuxPoly out;
  // x1^j (x2 + c x1^a)^k = sum_i binom(k,i) c^i x1^(j + a i) x2^(k - i)
  std::vector<Rational> c_powers{Rational(1)};
  for (const auto& [e, coef] : phi.terms()) {
    while (static_cast<long>(c_powers.size()) <= e.e2) c_powers.push_back(c_powers.back() * c);
    for (long i = 0; i <= e.e2; ++i) {
      if (i > 0 && sgn(c) == 0) break;
      Rational term = coef * binomial(e.e2, i) * c_powers[i];
      out += PuiseuxPoly::monomial(term, Rational(e.e1 + a * i), e.e2 - i);
    }
  }
  return out.with_ramification(std::lcm(phi.ramification(), den_as_long(a)));
}

PuiseuxPoly PuiseuxPoly::with_ramification(long extra) const {
  if (extra <= 0) throw std::invalid_argument("ramification index must be positive");
  PuiseuxPoly out = *this;
  out.ramification_ = std::lcm(ramification_, extra);
  return out;
}

namespace {

// Falling factorial e (e-1) ... (e-order+1) for a rational exponent.
Rational falling_factorial(const Rational& e, unsigned order) {
  Rational out = 1;
  for (unsigned i = 0; i < order; ++i) out *= (e - i);
  return out;
}

}  // namespace

PuiseuxPoly partial_derivative(const PuiseuxPoly& phi, Variable v, unsigned order) {
  if (order == 0) return phi;
  PuiseuxPoly out;
  for (const auto& [e, c] : phi.terms()) {
    if (v == Variable::x2) {
      if (e.e2 < static_cast<long>(order)) continue;
      Rational f = falling_factorial(Rational(e.e2), order);
      out += PuiseuxPoly::monomial(c * f, e.e1, e.e2 - static_cast<long>(order));
    } else {
      Rational f = falling_factorial(e.e1, order);
      if (sgn(f) == 0) continue;
      Rational ne = e.e1 - order;
      if (sgn(ne) < 0) {
        throw std::domain_error("x1-derivative produces a negative exponent");
      }
      out += PuiseuxPoly::monomial(c * f, ne, e.e2);
    }
  }
  return out.with_ramification(phi.ramification());
}

PuiseuxPoly swap_variables(const PuiseuxPoly& phi) {
  if (!phi.is_ordinary()) throw std::domain_error("cannot swap variables of a ramified polynomial");
  PuiseuxPoly out;
  for (const auto& [e, c] : phi.terms()) out += PuiseuxPoly::monomial(c, Rational(e.e2), to_long(e.e1));
  return out;
}

PuiseuxPoly mirror_x1(const PuiseuxPoly& phi) {
  if (!phi.is_ordinary()) throw std::domain_error("cannot mirror a ramified polynomial");
  PuiseuxPoly out;
  for (const auto& [e, c] : phi.terms()) {
    bool odd = to_long(e.e1) % 2 != 0;
    out += PuiseuxPoly::monomial(odd ? Rational(-c) : c, e.e1, e.e2);
  }
  return out;
}

double evaluate_real(const PuiseuxPoly& phi, double x1, double x2) {
  bool ordinary = phi.is_ordinary();
  if (x1 < 0 && !ordinary) {
    throw std::domain_error("ramified polynomial evaluated at x1 < 0");
  }
  double sum = 0.0;
  for (const auto& [e, c] : phi.terms()) {
    double m1 = is_integer(e.e1) ? std::pow(x1, static_cast<int>(to_long(e.e1)))
                                 : std::pow(x1, to_double(e.e1));
    sum += to_double(c) * m1 * std::pow(x2, static_cast<int>(e.e2));
  }
  return sum;
}

namespace {

std::string monomial_text(const ExponentPair& e) {
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += "*";
    out += piece;
  };
  if (sgn(e.e1) != 0) {
    if (e.e1 == 1) {
      append("x1");
    } else if (is_integer(e.e1)) {
      append("x1^" + to_string(e.e1));
    } else {
      append("x1^(" + to_string(e.e1) + ")");
    }
  }
  if (e.e2 != 0) append(e.e2 == 1 ? "x2" : "x2^" + std::to_string(e.e2));
  return out;
}

}  // namespace

std::string to_string(const PuiseuxPoly& phi) {
  if (phi.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : phi.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_text(e);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace newtonpoly
