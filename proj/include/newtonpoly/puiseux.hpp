#pragma once

#include "newtonpoly/rational.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace newtonpoly {

/// Exponent of a monomial x1^e1 * x2^e2. The x1-exponent may be a
/// non-negative rational (Puiseux), the x2-exponent is always an integer.
struct ExponentPair {
  Rational e1;
  long e2 = 0;

  ExponentPair() = default;
  ExponentPair(Rational first, long second) : e1(std::move(first)), e2(second) {}
  ExponentPair(long first, long second) : e1(first), e2(second) {}

  friend bool operator==(const ExponentPair& a, const ExponentPair& b) {
    return a.e1 == b.e1 && a.e2 == b.e2;
  }
  friend bool operator!=(const ExponentPair& a, const ExponentPair& b) { return !(a == b); }
  /// Canonical term order: lexicographic by (e1, e2).
  friend bool operator<(const ExponentPair& a, const ExponentPair& b) {
    int c = cmp(a.e1, b.e1);
    return c < 0 || (c == 0 && a.e2 < b.e2);
  }
};

enum class Variable { x1, x2 };

/// Finitely supported bivariate polynomial with rational x1-exponents
/// (sharing the ramification index q) and integer x2-exponents. Zero
/// coefficients are never stored.
class PuiseuxPoly {
 public:
  using Terms = std::map<ExponentPair, Rational>;

  PuiseuxPoly() = default;
  explicit PuiseuxPoly(const Rational& constant);
  PuiseuxPoly(std::initializer_list<std::pair<const ExponentPair, Rational>> terms);
  explicit PuiseuxPoly(Terms terms);

  static PuiseuxPoly monomial(const Rational& coefficient, const Rational& e1, long e2);
  static PuiseuxPoly variable(Variable v);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Ramification index q. Every x1-exponent has a denominator dividing q;
  /// q only grows (by lcm) through arithmetic and shears.
  long ramification() const { return ramification_; }
  /// Copy whose ramification index is lcm(q, extra).
  PuiseuxPoly with_ramification(long extra) const;
  /// True when all x1-exponents present are integers.
  bool is_ordinary() const;

  /// Coefficient of x1^e1 x2^e2 (zero if absent).
  Rational coefficient(const ExponentPair& e) const;

  long degree_x2() const;
  Rational degree_x1() const;

  PuiseuxPoly& operator+=(const PuiseuxPoly& other);
  PuiseuxPoly& operator-=(const PuiseuxPoly& other);
  PuiseuxPoly& operator*=(const PuiseuxPoly& other);
  PuiseuxPoly& operator*=(const Rational& scalar);

  friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
  friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
  friend PuiseuxPoly operator*(PuiseuxPoly a, const PuiseuxPoly& b) { return a *= b; }
  friend PuiseuxPoly operator*(PuiseuxPoly a, const Rational& s) { return a *= s; }
  friend PuiseuxPoly operator*(const Rational& s, PuiseuxPoly a) { return a *= s; }
  PuiseuxPoly operator-() const;

  friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PuiseuxPoly& a, const PuiseuxPoly& b) { return !(a == b); }

 private:
  void add_term(const ExponentPair& e, const Rational& c);
  void refresh_ramification();

  Terms terms_;
  long ramification_ = 1;
};

PuiseuxPoly pow(const PuiseuxPoly& base, unsigned long exponent);

/// phi(x1, x2 + c * x1^a), expanded exactly. Requires a > 0.
PuiseuxPoly substitute_shear(const PuiseuxPoly& phi, const Rational& c, const Rational& a);

/// Term-wise derivative of the given order. For x1 the power rule is applied
/// with rational exponents; terms whose exponent reaches zero drop out.
PuiseuxPoly partial_derivative(const PuiseuxPoly& phi, Variable v, unsigned order = 1);

/// phi(x2, x1) for ordinary polynomials.
PuiseuxPoly swap_variables(const PuiseuxPoly& phi);

/// phi(-x1, x2) for ordinary polynomials.
PuiseuxPoly mirror_x1(const PuiseuxPoly& phi);

/// Double-precision evaluation. Throws std::domain_error when x1 < 0 and the
/// polynomial is ramified.
double evaluate_real(const PuiseuxPoly& phi, double x1, double x2);

/// Canonical text form, re-parseable by parse_expression ("0" for zero).
std::string to_string(const PuiseuxPoly& phi);

}  // namespace newtonpoly
