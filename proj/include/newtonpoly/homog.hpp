#pragma once

#include "newtonpoly/newton.hpp"
#include "newtonpoly/qpoly.hpp"

#include <optional>
#include <vector>

namespace newtonpoly {

/// x1 > 0 uses the profile t -> P(1, t); x1 < 0 uses P(-1, t).
enum class Branch { positive, negative };

/// A real root x2 = t |x1|^a of a mixed-homogeneous polynomial, off the x2-axis.
struct HomogRoot {
  Branch branch = Branch::positive;
  QPoly factor;                  // squarefree factor of the profile containing t
  IsolatedRoot interval;         // isolating interval for t
  std::optional<Rational> value; // exact t when rational
  int multiplicity = 0;
  double approx = 0.0;
};

struct FactoredHomog {
  Rational c;            // coefficient of the term of highest x2-degree
  Rational nu1;          // x1-order
  long nu2 = 0;          // x2-order
  long p = 0;            // p / q = k2 / k1 in lowest terms (0 for monomials)
  long q = 0;
  bool monomial = false;
  bool swapped = false;  // variables exchanged so that p >= q
  std::optional<Weight> weight;
  std::vector<HomogRoot> real_roots;  // roots with t != 0
  long n = 0;                         // sum of multiplicities over all roots
  long complex_roots = 0;             // non-real roots of the positive profile, with multiplicity
  Rational m;
  Rational d_h;
  Rational d;
  Rational h;
};

struct HomogInvariants {
  Rational m;
  Rational d_h;
  Rational d;
  Rational h;
};

/// Profile roots of a polynomial that is homogeneous for the ratio a = k2/k1.
/// Includes t = 0 only through nu2 (not listed). The negative branch is
/// analysed only for ordinary polynomials with a non-integral a, since for
/// integral a it mirrors the positive one.
struct ProfileRoots {
  Rational nu1;
  long nu2 = 0;
  std::vector<HomogRoot> roots;
  long positive_degree = 0;  // degree of P(1, t) / t^nu2
};
ProfileRoots profile_roots(const PuiseuxPoly& P, const Rational& a);

/// Factorization data of a mixed-homogeneous polynomial. A monomial needs the
/// weight from context to define d_h; without one d_h is set to d.
FactoredHomog factor_homog(const PuiseuxPoly& P, std::optional<Weight> weight = std::nullopt);

HomogInvariants homog_invariants(const FactoredHomog& F);

struct PrincipalRoot {
  Rational b;
  int multiplicity = 0;
};

/// The unique real root b x1^p (q = 1) of multiplicity > d_h, if any.
/// Throws SymbolicError("irrational principal root") when it is not rational.
std::optional<PrincipalRoot> principal_root(const FactoredHomog& F);

struct D2Root {
  Branch branch = Branch::positive;
  std::optional<Rational> value;  // t with x2 = t |x1|^a
  double approx = 0.0;
  int multiplicity = 0;
  bool on_axis = false;           // t = 0, i.e. the x1-axis
};

struct ExceptionalForm {
  Rational lambda_sum;
  Rational lambda_prod;
  bool real_roots = false;  // lambda_sum > 0
};

struct D2Report {
  PuiseuxPoly d2;
  bool trivial = false;                 // d2 == 0 or no roots at all
  std::vector<D2Root> roots;            // roots off the x2-axis
  std::optional<std::size_t> max_root;  // index into roots
  bool tie = false;                     // several roots share the maximal multiplicity
  bool others_bounded = true;           // all other roots have multiplicity <= d_h - 2
  std::optional<ExceptionalForm> exceptional;
};

/// Roots of the second x2-derivative of a mixed-homogeneous P.
D2Report analyze_d2(const PuiseuxPoly& P, std::optional<Weight> weight = std::nullopt);

}  // namespace newtonpoly
