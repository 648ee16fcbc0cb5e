#pragma once

#include "newtonpoly/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace newtonpoly {

/// Dense univariate polynomial over the rationals; coeffs()[i] multiplies t^i.
/// The leading coefficient is never zero (the zero polynomial has no coefficients).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly monomial(const Rational& c, unsigned degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  Rational coefficient(unsigned i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& t) const;
  double evaluate(double t) const;

  QPoly derivative() const;
  QPoly monic() const;
  /// Integer coefficients with content one and positive leading coefficient.
  QPoly primitive() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& s);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division; throws std::domain_error on division by zero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (zero when both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

/// Yun's algorithm: list of (squarefree factor, multiplicity) with pairwise
/// coprime monic factors whose product with multiplicities is the monic input.
/// Factors of degree zero are omitted.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

/// Real root of a squarefree polynomial, isolated in (lo, hi]. When the root
/// is known exactly, lo == hi == the root.
struct IsolatedRoot {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  double approx = 0.0;
};

class SturmChain {
 public:
  explicit SturmChain(const QPoly& f);
  /// Number of distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const;
  const QPoly& poly() const { return chain_.front(); }

 private:
  int variations(const Rational& x) const;
  std::vector<QPoly> chain_;
};

/// Cauchy bound: every real root has |t| < bound.
Rational root_bound(const QPoly& f);

/// Isolates all real roots of a squarefree polynomial, in increasing order.
std::vector<IsolatedRoot> isolate_real_roots(const QPoly& f);

/// Shrinks the interval until hi - lo <= width (or the root is exact).
void refine_root(const SturmChain& chain, IsolatedRoot& root, const Rational& width);

/// The root as an exact rational, if it is one. f must be squarefree.
std::optional<Rational> rational_root_value(const QPoly& f, IsolatedRoot root);

}  // namespace newtonpoly
