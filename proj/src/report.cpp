#include "newtonpoly/report.hpp"

#include "newtonpoly/parser.hpp"

#include <cmath>
#include <cstdio>

namespace newtonpoly {

using nlohmann::json;

AnalysisReport analyze(const PuiseuxPoly& phi, const std::string& input) {
  AnalysisReport rep;
  rep.input = input.empty() ? to_string(phi) : input;
  rep.phi = phi;
  rep.verdict = classify_adaptedness(phi);
  rep.newton = build_polyhedron(phi);
  rep.principal.poly = face_part(phi, rep.newton.principal);
  if (rep.newton.principal.kind == FaceKind::compact_edge) {
    rep.principal.factored = factor_homog(rep.principal.poly);
    rep.principal.d2 = analyze_d2(rep.principal.poly);
  }
  rep.adapted = varchenko_adapt(phi);
  rep.jet = principal_root_jet(rep.adapted);
  rep.h = rep.adapted.height;
  rep.beta = 1 / rep.h;
  rep.gamma = 1 / rep.h;
  rep.warnings = rep.adapted.warnings;
  rep.warnings.insert(rep.warnings.end(), rep.jet.warnings.begin(), rep.jet.warnings.end());
  if (rep.adapted.swapped) rep.warnings.push_back("variables exchanged; sigma and psi are functions of x2");
  return rep;
}

AnalysisReport analyze(const std::string& text) { return analyze(parse_expression(text), text); }

json json_rational(const Rational& r) { return to_string(r); }

json json_double(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::stod(buf);
}

namespace {

json json_point(const ExponentPair& e) { return json::array({json_rational(e.e1), e.e2}); }

json json_weight(const Weight& w) { return json::array({json_rational(w.k1), json_rational(w.k2)}); }

json json_face(const Face& f) {
  json j{{"kind", to_string(f.kind)}, {"points", json::array({json_point(f.first)})}};
  if (f.second) j["points"].push_back(json_point(*f.second));
  if (f.weight) j["weight"] = json_weight(*f.weight);
  return j;
}

json json_doubles(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(json_double(x));
  return out;
}

}  // namespace

json to_json(const AnalysisReport& r, bool trace) {
  json j;
  j["input"] = r.input;
  j["expanded"] = to_string(r.phi);
  j["ramification"] = r.phi.ramification();
  json support = json::array();
  for (const auto& [e, c] : r.phi.terms()) support.push_back({json_rational(e.e1), e.e2, json_rational(c)});
  j["support"] = support;

  json newton;
  newton["vertices"] = json::array();
  for (const auto& v : r.newton.vertices) newton["vertices"].push_back(json_point(v));
  newton["edges"] = json::array();
  for (const auto& e : r.newton.edge_data) {
    newton["edges"].push_back({{"index", e.index},
                               {"left", json_point(e.left)},
                               {"right", json_point(e.right)},
                               {"weight", json_weight(e.weight)},
                               {"a", json_rational(e.a)},
                               {"d", json_rational(e.d_l)}});
  }
  newton["distance"] = json_rational(r.newton.distance);
  newton["principal_face"] = json_face(r.newton.principal);
  j["newton"] = newton;

  json adapt;
  adapt["adapted"] = r.verdict.adapted;
  adapt["case"] = r.adapted.verdict.adapt_case ? json(to_string(*r.adapted.verdict.adapt_case)) : json(nullptr);
  adapt["sigma"] = to_string(sigma_poly(r.adapted.sigma_jet));
  adapt["sigma_jet"] = json::array();
  for (const auto& s : r.adapted.sigma_jet) {
    adapt["sigma_jet"].push_back({{"b", json_rational(s.b)}, {"m", json_rational(s.m)}});
  }
  adapt["height"] = json_rational(r.adapted.height);
  adapt["swapped"] = r.adapted.swapped;
  adapt["adapted_form"] = to_string(r.adapted.adapted_poly);
  if (trace) {
    adapt["trace"] = json::array();
    for (const auto& s : r.adapted.steps) {
      adapt["trace"].push_back({{"distance_before", json_rational(s.distance_before)},
                                {"b", json_rational(s.b)},
                                {"exponent", json_rational(s.exponent)},
                                {"multiplicity", s.multiplicity}});
    }
  }
  j["adapt"] = adapt;

  json jet;
  jet["psi"] = to_string(r.jet.psi);
  jet["a"] = json_rational(r.jet.a);
  jet["case"] = to_string(r.jet.jet_case);
  jet["weight"] = json_weight(r.jet.weight);
  if (r.jet.a_p) jet["a_p"] = json_rational(*r.jet.a_p);
  if (r.jet.c_p) jet["c_p"] = json_rational(*r.jet.c_p);
  if (r.jet.c_p_approx) jet["c_p_approx"] = json_double(*r.jet.c_p_approx);
  j["jet"] = jet;

  json pp;
  pp["poly"] = to_string(r.principal.poly);
  if (r.principal.factored) {
    const auto& F = *r.principal.factored;
    pp["m"] = json_rational(F.m);
    pp["d_h"] = json_rational(F.d_h);
    pp["d"] = json_rational(F.d);
    pp["h"] = json_rational(F.h);
    pp["p"] = F.p;
    pp["q"] = F.q;
    json roots = json::array();
    for (const auto& root : F.real_roots) {
      json jr{{"branch", root.branch == Branch::positive ? "+" : "-"},
              {"multiplicity", root.multiplicity},
              {"approx", json_double(root.approx)}};
      if (root.value) jr["value"] = json_rational(*root.value);
      roots.push_back(jr);
    }
    pp["real_roots"] = roots;
  }
  j["principal_part"] = pp;

  if (r.principal.d2) {
    const auto& d2 = *r.principal.d2;
    json jd{{"d2_poly", to_string(d2.d2)}, {"exceptional", d2.exceptional.has_value()}};
    if (d2.exceptional) {
      jd["lambda_sum"] = json_rational(d2.exceptional->lambda_sum);
      jd["lambda_prod"] = json_rational(d2.exceptional->lambda_prod);
      jd["real_roots"] = d2.exceptional->real_roots;
    }
    json roots = json::array();
    for (const auto& root : d2.roots) {
      json jr{{"multiplicity", root.multiplicity}, {"approx", json_double(root.approx)}, {"on_axis", root.on_axis}};
      if (root.value) jr["value"] = json_rational(*root.value);
      roots.push_back(jr);
    }
    jd["roots"] = roots;
    j["d2"] = jd;
  }

  j["indices"] = {{"h", json_rational(r.h)},
                  {"d_original", json_rational(r.newton.distance)},
                  {"beta", json_rational(r.beta)},
                  {"gamma", json_rational(r.gamma)}};
  j["warnings"] = r.warnings;
  return j;
}

json to_json(const ExponentFit& fit) {
  json j{{"kind", fit.kind},
         {"grid", json_doubles(fit.grid)},
         {"values", json_doubles(fit.values)},
         {"fit_from", fit.fit_from},
         {"fitted", json_double(fit.decisive())},
         {"fitted_plain", json_double(fit.fitted_exponent)},
         {"expected", json_rational(fit.expected)},
         {"tolerance", json_double(fit.tolerance)},
         {"log_model", fit.use_log},
         {"residual", json_double(fit.residual)},
         {"pass", fit.pass}};
  if (fit.fitted_with_log) j["fitted_with_log"] = json_double(*fit.fitted_with_log);
  if (fit.fitted_coarse) j["fitted_coarse"] = json_double(*fit.fitted_coarse);
  return j;
}

json to_json(const SmallParamReport& r) {
  json ratios = json::array();
  json values = json::array();
  for (std::size_t i = 0; i < r.sigmas.size(); ++i) {
    ratios.push_back(json_doubles(r.ratios[i]));
    values.push_back(json_doubles(r.values[i]));
  }
  json j{{"kind", to_string(r.kind)},
         {"m", r.m},
         {"lambdas", json_doubles(r.lambdas)},
         {"sigmas", json_doubles(r.sigmas)},
         {"values", values},
         {"ratios", ratios},
         {"envelope", {json_double(r.alpha), json_double(r.beta)}},
         {"block_max", json_doubles(r.block_max)},
         {"finite", r.finite},
         {"stable", r.stable},
         {"pass", r.finite && r.stable}};
  if (r.sigma0_exponent) j["sigma0_exponent"] = json_double(*r.sigma0_exponent);
  return j;
}

}  // namespace newtonpoly
