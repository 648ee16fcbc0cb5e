#include "newtonpoly/homog.hpp"

#include "newtonpoly/errors.hpp"

#include <algorithm>
#include <map>

namespace newtonpoly {

namespace {

// Weight of the line carrying all of P's support; throws if there is none.
Weight support_line_weight(const PuiseuxPoly& P) {
  const auto& first = P.terms().begin()->first;
  const auto& last = P.terms().rbegin()->first;
  Weight w;
  try {
    w = edge_weight(first, last);
  } catch (const std::invalid_argument&) {
    throw SymbolicError("not mixed-homogeneous");
  }
  for (const auto& [e, c] : P.terms()) {
    if (w.degree(e) != 1) throw SymbolicError("not mixed-homogeneous");
  }
  return w;
}

QPoly profile(const PuiseuxPoly& P, long nu2, Branch branch) {
  std::vector<Rational> coeffs(P.degree_x2() - nu2 + 1, Rational(0));
  for (const auto& [e, c] : P.terms()) {
    Rational v = c;
    if (branch == Branch::negative && to_long(e.e1) % 2 != 0) v = -v;
    coeffs[e.e2 - nu2] += v;
  }
  return QPoly(std::move(coeffs));
}

void collect_roots(const QPoly& g, Branch branch, std::vector<HomogRoot>& out) {
  for (const auto& [factor, mult] : squarefree_decomposition(g)) {
    for (const auto& iso : isolate_real_roots(factor)) {
      HomogRoot r;
      r.branch = branch;
      r.factor = factor;
      r.interval = iso;
      r.value = rational_root_value(factor, iso);
      r.multiplicity = mult;
      r.approx = r.value ? r.value->get_d() : iso.approx;
      out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(), [](const HomogRoot& x, const HomogRoot& y) {
    if (x.branch != y.branch) return x.branch == Branch::positive;
    return x.approx < y.approx;
  });
}

}  // namespace

ProfileRoots profile_roots(const PuiseuxPoly& P, const Rational& a) {
  ProfileRoots out;
  if (P.is_zero()) return out;
  out.nu1 = P.terms().begin()->first.e1;
  out.nu2 = P.degree_x2();
  for (const auto& [e, c] : P.terms()) out.nu2 = std::min(out.nu2, e.e2);
  QPoly plus = profile(P, out.nu2, Branch::positive);
  out.positive_degree = plus.degree();
  collect_roots(plus, Branch::positive, out.roots);
  if (P.is_ordinary() && !is_integer(a)) {
    collect_roots(profile(P, out.nu2, Branch::negative), Branch::negative, out.roots);
  }
  return out;
}

FactoredHomog factor_homog(const PuiseuxPoly& P, std::optional<Weight> weight) {
  if (P.is_zero()) throw SymbolicError("not finite type");
  FactoredHomog F;
  PuiseuxPoly poly = P;
  F.monomial = P.size() == 1;
  if (!F.monomial) weight = support_line_weight(P);
  if (weight && weight->k1 > weight->k2 && P.is_ordinary()) {
    poly = swap_variables(P);
    weight = Weight{weight->k2, weight->k1};
    F.swapped = true;
  }
  F.weight = weight;
  long top = poly.degree_x2();
  for (const auto& [e, c] : poly.terms()) {
    if (e.e2 == top) F.c = c;
  }

  Rational a = weight ? weight->ratio() : Rational(1);
  ProfileRoots pr = profile_roots(poly, a);
  F.nu1 = pr.nu1;
  F.nu2 = pr.nu2;
  F.real_roots = pr.roots;
  F.m = std::max<Rational>(F.nu1, Rational(F.nu2));
  long positive_real = 0;
  for (const auto& r : F.real_roots) {
    if (r.multiplicity > F.m) F.m = r.multiplicity;
    if (r.branch == Branch::positive) positive_real += r.multiplicity;
  }
  F.complex_roots = pr.positive_degree - positive_real;

  Rational axis_max = std::max<Rational>(F.nu1, Rational(F.nu2));
  if (F.monomial) {
    F.d = axis_max;
    F.d_h = weight ? weight->homogeneous_distance() : F.d;
  } else {
    F.p = to_long(Rational(a.get_num()));
    F.q = to_long(Rational(a.get_den()));
    F.n = (top - F.nu2) / F.q;
    F.d_h = weight->homogeneous_distance();
    F.d = std::max<Rational>(axis_max, F.d_h);
  }
  F.h = std::max<Rational>(F.m, F.d_h);
  return F;
}

HomogInvariants homog_invariants(const FactoredHomog& F) {
  HomogInvariants inv;
  inv.m = F.m;
  inv.d_h = F.d_h;
  if (F.monomial) {
    inv.d = std::max<Rational>(F.nu1, Rational(F.nu2));
  } else {
    Rational eq = (F.nu1 * F.q + Rational(F.nu2 * F.p) + Rational(F.p * F.q * F.n)) / (F.q + F.p);
    inv.d = std::max<Rational>(std::max<Rational>(F.nu1, Rational(F.nu2)), eq);
  }
  inv.h = std::max<Rational>(F.m, F.d_h);
  return inv;
}

std::optional<PrincipalRoot> principal_root(const FactoredHomog& F) {
  if (F.monomial || F.q != 1) return std::nullopt;
  for (const auto& r : F.real_roots) {
    if (r.branch != Branch::positive || r.multiplicity <= F.d_h) continue;
    if (!r.value) throw SymbolicError("irrational principal root");
    return PrincipalRoot{*r.value, r.multiplicity};
  }
  return std::nullopt;
}

D2Report analyze_d2(const PuiseuxPoly& P, std::optional<Weight> weight) {
  if (P.is_zero()) throw SymbolicError("not finite type");
  if (P.size() > 1) weight = support_line_weight(P);
  if (!weight) throw std::invalid_argument("analyze_d2 of a monomial needs a weight");
  D2Report rep;
  rep.d2 = partial_derivative(P, Variable::x2, 2);

  if (P.is_ordinary() && P.size() == 3 && P.coefficient(ExponentPair(0, 4)) != 0 &&
      P.coefficient(ExponentPair(5, 2)) != 0 && P.coefficient(ExponentPair(10, 0)) != 0) {
    Rational c = P.coefficient(ExponentPair(0, 4));
    ExceptionalForm ex;
    ex.lambda_sum = -P.coefficient(ExponentPair(5, 2)) / c;
    ex.lambda_prod = P.coefficient(ExponentPair(10, 0)) / c;
    ex.real_roots = sgn(ex.lambda_sum) > 0;
    rep.exceptional = ex;
  }

  if (rep.d2.is_zero()) {
    rep.trivial = true;
    return rep;
  }
  ProfileRoots pr = profile_roots(rep.d2, weight->ratio());
  for (const auto& r : pr.roots) {
    rep.roots.push_back(D2Root{r.branch, r.value, r.approx, r.multiplicity, false});
  }
  if (pr.nu2 > 0) {
    rep.roots.push_back(D2Root{Branch::positive, Rational(0), 0.0, static_cast<int>(pr.nu2), true});
  }
  if (rep.roots.empty()) {
    rep.trivial = true;
    return rep;
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < rep.roots.size(); ++i) {
    const auto& r = rep.roots[i];
    const auto& b = rep.roots[best];
    if (r.multiplicity > b.multiplicity ||
        (r.multiplicity == b.multiplicity && r.approx < b.approx)) {
      best = i;
    }
  }
  rep.max_root = best;
  Rational bound = weight->homogeneous_distance() - 2;
  for (std::size_t i = 0; i < rep.roots.size(); ++i) {
    if (i == best) continue;
    if (rep.roots[i].multiplicity == rep.roots[best].multiplicity) rep.tie = true;
    if (rep.roots[i].multiplicity > bound) rep.others_bounded = false;
  }
  return rep;
}

}  // namespace newtonpoly
