#include "newtonpoly/adapt.hpp"

#include "newtonpoly/errors.hpp"

#include <algorithm>
#include <sstream>

namespace newtonpoly {

const char* to_string(AdaptCase c) {
  switch (c) {
    case AdaptCase::a: return "a";
    case AdaptCase::b: return "b";
    case AdaptCase::c: return "c";
  }
  return "?";
}

AdaptednessVerdict classify_adaptedness(const PuiseuxPoly& phi) {
  if (phi.is_zero()) throw SymbolicError("not finite type");
  for (const auto& [e, c] : phi.terms()) {
    if (e.e1 + e.e2 <= 1) throw SymbolicError("has linear part");
  }
  NewtonData N = build_polyhedron(phi);
  AdaptednessVerdict v;
  v.reason.face = N.principal.kind;
  v.reason.distance = N.distance;
  switch (N.principal.kind) {
    case FaceKind::vertex:
      v.adapted = true;
      v.adapt_case = AdaptCase::b;
      return v;
    case FaceKind::halfline_horizontal:
    case FaceKind::halfline_vertical:
      v.adapted = true;
      v.adapt_case = AdaptCase::c;
      return v;
    case FaceKind::compact_edge:
      break;
  }
  const Weight& w = *N.principal.weight;
  Rational r = std::max<Rational>(w.ratio(), 1 / w.ratio());
  v.reason.ratio = r;
  v.reason.ratio_integral = is_integer(r);
  if (!v.reason.ratio_integral) {
    v.adapted = true;
    v.adapt_case = AdaptCase::a;
    return v;
  }
  FactoredHomog F = factor_homog(face_part(phi, N.principal));
  v.reason.m_principal = F.m;
  v.adapted = F.m <= N.distance;
  if (v.adapted) v.adapt_case = AdaptCase::a;
  return v;
}

long default_step_budget(const PuiseuxPoly& phi) { return 4 + phi.degree_x2(); }

AdaptedResult varchenko_adapt(const PuiseuxPoly& phi, long max_steps) {
  if (max_steps <= 0) max_steps = default_step_budget(phi);
  AdaptedResult res;
  PuiseuxPoly current = phi;
  while (true) {
    AdaptednessVerdict v = classify_adaptedness(current);
    if (v.adapted) {
      res.verdict = v;
      res.height = v.reason.distance;
      break;
    }
    NewtonData N = build_polyhedron(current);
    Weight w = *N.principal.weight;
    if (w.k1 > w.k2) {
      // The principal root is a curve x1 = b x2^k; exchange the variables once.
      if (!res.steps.empty() || res.swapped || !current.is_ordinary()) {
        throw SymbolicError("principal root orientation changed during the shears");
      }
      current = swap_variables(current);
      res.swapped = true;
      continue;
    }
    if (static_cast<long>(res.steps.size()) >= max_steps) throw SymbolicError("step budget exceeded");
    FactoredHomog F = factor_homog(face_part(current, N.principal));
    std::optional<PrincipalRoot> root = principal_root(F);
    if (!root) {
      // Only reachable when the excess multiplicity sits on complex roots.
      res.warnings.push_back("maximal-multiplicity root of the principal part is not real; stopped");
      res.verdict = v;
      res.height = v.reason.distance;
      break;
    }
    Rational a = w.ratio();
    res.steps.push_back(VarchenkoStep{N.distance, root->b, a, root->multiplicity});
    res.sigma_jet.push_back(SigmaTerm{root->b, a});
    current = substitute_shear(current, root->b, a);
  }
  res.adapted_poly = current;
  return res;
}

PuiseuxPoly replay(const PuiseuxPoly& phi, const AdaptedResult& result) {
  PuiseuxPoly out = result.swapped ? swap_variables(phi) : phi;
  for (const auto& s : result.sigma_jet) out = substitute_shear(out, s.b, s.m);
  return out;
}

PuiseuxPoly sigma_poly(const std::vector<SigmaTerm>& jet) {
  PuiseuxPoly out;
  for (const auto& s : jet) out += PuiseuxPoly::monomial(s.b, s.m, 0);
  return out;
}

namespace {

Weight weight_through(const ExponentPair& v, const Rational& a) {
  Rational k1 = 1 / (v.e1 + a * v.e2);
  return Weight{k1, Rational(a * k1)};
}

}  // namespace

RootJet principal_root_jet(const PuiseuxPoly& phi) { return principal_root_jet(varchenko_adapt(phi)); }

RootJet principal_root_jet(const AdaptedResult& adapted) {
  RootJet jet;
  NewtonData N = build_polyhedron(adapted.adapted_poly);
  const Face& face = N.principal;
  PuiseuxPoly sigma = sigma_poly(adapted.sigma_jet);
  jet.psi = sigma;

  Rational largest = 1;
  for (const auto& s : adapted.sigma_jet) largest = std::max<Rational>(largest, s.m);
  Rational sigma_top = largest;
  for (const auto& e : N.edge_data) largest = std::max<Rational>(largest, e.a);

  switch (face.kind) {
    case FaceKind::compact_edge: {
      jet.jet_case = AdaptCase::a;
      jet.weight = *face.weight;
      jet.a = jet.weight.ratio();
      if (!is_integer(jet.a)) break;
      jet.a_p = jet.a;
      D2Report rep = analyze_d2(face_part(adapted.adapted_poly, face), jet.weight);
      Rational c_p = 0;
      if (rep.trivial) {
        jet.warnings.push_back("second x2-derivative of the principal part has no real root; c_p set to 0");
      } else {
        const D2Root& r = rep.roots[*rep.max_root];
        if (rep.tie) {
          jet.warnings.push_back("several roots of maximal multiplicity; the smallest was chosen");
        }
        if (r.value) {
          c_p = *r.value;
        } else {
          jet.c_p_approx = r.approx;
          jet.warnings.push_back("c_p is irrational; only a numeric value is reported");
        }
      }
      if (!jet.c_p_approx) {
        jet.c_p = c_p;
        jet.psi += PuiseuxPoly::monomial(c_p, jet.a, 0);
      }
      break;
    }
    case FaceKind::vertex: {
      jet.jet_case = AdaptCase::b;
      const ExponentPair& v = face.first;
      Rational a_left = 0;
      std::optional<Rational> a_right;
      for (const auto& e : N.edge_data) {
        if (e.right == v) a_left = e.a;
        if (e.left == v) a_right = e.a;
      }
      Rational lo = std::max<Rational>(a_left, sigma_top);
      if (a_right && lo >= *a_right) {
        lo = a_left;
        jet.warnings.push_back("no supporting weight with ratio above the shear exponents; used the vertex range");
      }
      jet.a = a_right ? simplest_between(lo, *a_right) : Rational(floor(lo) + 1);
      jet.weight = weight_through(v, jet.a);
      break;
    }
    case FaceKind::halfline_horizontal: {
      jet.jet_case = AdaptCase::c;
      jet.a = Rational(floor(largest) + 1);
      jet.weight = weight_through(face.first, jet.a);
      break;
    }
    case FaceKind::halfline_vertical: {
      jet.jet_case = AdaptCase::c;
      Rational hi = N.edge_data.empty() ? Rational(1) : N.edge_data.front().a;
      jet.a = simplest_between(Rational(0), hi);
      jet.weight = weight_through(face.first, jet.a);
      jet.warnings.push_back("vertical half-line principal face; weight chosen below the first edge");
      break;
    }
  }
  return jet;
}

}  // namespace newtonpoly
