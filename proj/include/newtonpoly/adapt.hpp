#pragma once

#include "newtonpoly/homog.hpp"
#include "newtonpoly/newton.hpp"

#include <optional>
#include <string>
#include <vector>

namespace newtonpoly {

enum class AdaptCase { a, b, c };

const char* to_string(AdaptCase c);

struct AdaptednessReason {
  FaceKind face = FaceKind::vertex;
  std::optional<Rational> ratio;  // k2/k1 of a compact principal face, oriented so that ratio >= 1
  bool ratio_integral = false;
  std::optional<Rational> m_principal;  // m of the principal part
  Rational distance;
};

struct AdaptednessVerdict {
  bool adapted = false;
  std::optional<AdaptCase> adapt_case;
  AdaptednessReason reason;
};

/// Throws SymbolicError("has linear part") if phi has terms of total degree <= 1.
AdaptednessVerdict classify_adaptedness(const PuiseuxPoly& phi);

struct SigmaTerm {
  Rational b;
  Rational m;
};

struct VarchenkoStep {
  Rational distance_before;
  Rational b;
  Rational exponent;
  int multiplicity = 0;
};

struct AdaptedResult {
  bool swapped = false;  // variables exchanged before the first shear
  std::vector<SigmaTerm> sigma_jet;
  std::vector<VarchenkoStep> steps;
  Rational height;
  PuiseuxPoly adapted_poly;
  AdaptednessVerdict verdict;
  std::vector<std::string> warnings;
};

long default_step_budget(const PuiseuxPoly& phi);

/// Iterated shears x2 -> x2 + b x1^a removing the principal root until the
/// coordinates are adapted. max_steps <= 0 selects default_step_budget(phi).
AdaptedResult varchenko_adapt(const PuiseuxPoly& phi, long max_steps = 0);

/// Applies the recorded swap and shears to phi.
PuiseuxPoly replay(const PuiseuxPoly& phi, const AdaptedResult& result);

/// sigma(x1) = sum b_l x1^m_l as a polynomial in x1.
PuiseuxPoly sigma_poly(const std::vector<SigmaTerm>& jet);

struct RootJet {
  PuiseuxPoly psi;
  Rational a;
  Weight weight;
  AdaptCase jet_case = AdaptCase::a;
  std::optional<Rational> a_p;    // present iff a_p is an integer (case (a))
  std::optional<Rational> c_p;    // exact c_p when rational
  std::optional<double> c_p_approx;
  std::vector<std::string> warnings;
};

RootJet principal_root_jet(const PuiseuxPoly& phi);
RootJet principal_root_jet(const AdaptedResult& adapted);

}  // namespace newtonpoly
