// Command-line driver: newtonpoly {analyze|verify-decay|verify-sublevel|verify-smallparam}.

#include "newtonpoly/errors.hpp"
#include "newtonpoly/parser.hpp"
#include "newtonpoly/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

using namespace newtonpoly;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kSymbolic = 2, kNumeric = 3 };

double parse_lambda(const std::string& s) {
  if (auto caret = s.find('^'); caret != std::string::npos) {
    return std::pow(std::stod(s.substr(0, caret)), std::stod(s.substr(caret + 1)));
  }
  return std::stod(s);
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

json error_json(const std::string& code, const std::string& message, std::optional<std::size_t> offset = {}) {
  json e{{"code", code}, {"message", message}};
  if (offset) e["offset"] = *offset;
  return json{{"error", e}};
}

void print_analysis(std::ostream& os, const AnalysisReport& r) {
  os << "expanded:        " << to_string(r.phi) << "\n"
     << "distance:        " << to_string(r.newton.distance) << " ("
     << to_string(r.newton.principal.kind) << ")\n"
     << "adapted:         " << (r.verdict.adapted ? "yes" : "no") << "\n"
     << "sigma:           " << to_string(sigma_poly(r.adapted.sigma_jet)) << "\n"
     << "adapted form:    " << to_string(r.adapted.adapted_poly) << "\n"
     << "height h:        " << to_string(r.h) << "\n"
     << "psi:             " << to_string(r.jet.psi) << "  (case " << to_string(r.jet.jet_case)
     << ", a = " << to_string(r.jet.a) << ")\n"
     << "beta = gamma:    " << to_string(r.beta) << "\n";
  if (r.principal.d2 && r.principal.d2->exceptional) {
    os << "exceptional:     lambda1+lambda2 = " << to_string(r.principal.d2->exceptional->lambda_sum)
       << ", lambda1*lambda2 = " << to_string(r.principal.d2->exceptional->lambda_prod) << "\n";
  }
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
}

void print_fit(std::ostream& os, const ExponentFit& f) {
  os << f.kind << " fit: " << f.decisive() << " (plain " << f.fitted_exponent;
  if (f.fitted_with_log) os << ", log-corrected " << *f.fitted_with_log;
  os << "), expected " << to_string(f.expected) << " = " << to_double(f.expected) << ", tolerance "
     << f.tolerance << ": " << (f.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& w : f.warnings) os << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polyhedra, adapted coordinates and decay exponents of bivariate polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path;
  bool trace = false;
  std::uint64_t seed = 20240611;
  app.add_option("--json", json_path, "Write the JSON report to this path ('-' for stdout)");
  app.add_flag("--trace", trace, "Include the shear trace");
  app.add_option("--seed", seed, "Seed for jittered sampling");

  std::string expr;
  std::string expected_text;
  unsigned threads = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Symbolic analysis");
  analyze_cmd->add_option("expr", expr, "Polynomial")->required();

  auto* decay_cmd = app.add_subcommand("verify-decay", "Fit the oscillatory decay exponent");
  std::string lmax = "2^11";
  DecayOptions dopt;
  decay_cmd->add_option("expr", expr, "Polynomial")->required();
  decay_cmd->add_option("--lmax", lmax, "Largest lambda, e.g. 2^11");
  decay_cmd->add_option("--lmin", dopt.lambda_min, "Smallest lambda");
  decay_cmd->add_option("--ppd", dopt.points_per_decade, "Grid points per decade");
  decay_cmd->add_option("--tol", dopt.tolerance, "Tolerance on the exponent");
  decay_cmd->add_flag("--loglog", dopt.loglog, "Decide with the log-corrected model");
  decay_cmd->add_option("--radius", dopt.radius, "Bump radius");
  decay_cmd->add_option("--density", dopt.quadrature.density, "Panel density factor");
  decay_cmd->add_option("--max-panels", dopt.quadrature.max_panels, "Quadrature panel budget per lambda");
  decay_cmd->add_flag("--mirror", dopt.mirror, "Use phi(-x1, x2)");
  decay_cmd->add_flag("--half-plane", dopt.half_plane, "Integrate over x1 >= 0 only");
  decay_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
  decay_cmd->add_option("--expected", expected_text, "Height to test against instead of the computed one");

  auto* sub_cmd = app.add_subcommand("verify-sublevel", "Fit the sublevel-set exponent");
  SublevelOptions sopt;
  std::string preset;
  double alpha = 1.0;
  sub_cmd->add_option("expr", expr, "Polynomial");
  sub_cmd->add_option("--window", sopt.window, "Half side of the counting box");
  sub_cmd->add_option("--tol", sopt.tolerance, "Tolerance on the exponent");
  sub_cmd->add_option("--eps-min", sopt.eps_min, "Smallest epsilon");
  sub_cmd->add_option("--eps-max", sopt.eps_max, "Largest epsilon");
  sub_cmd->add_option("--ppd", sopt.points_per_decade, "Grid points per decade");
  sub_cmd->add_option("--n", sopt.n, "Cells per side of the coarse count");
  sub_cmd->add_flag("--log", sopt.log_model, "Decide with the log-corrected model");
  sub_cmd->add_flag("--half-plane", sopt.half_plane, "Count over x1 >= 0 only");
  sub_cmd->add_option("--preset", preset, "Numeric-only phase")->check(CLI::IsMember({"flat"}));
  sub_cmd->add_option("--alpha", alpha, "Flatness exponent of the flat preset");
  sub_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
  sub_cmd->add_option("--expected", expected_text, "Height to test against instead of the computed one");

  auto* sp_cmd = app.add_subcommand("verify-smallparam", "Small-parameter bound check");
  std::string kind;
  int m = 2;
  SmallParamOptions popt;
  sp_cmd->add_option("--kind", kind, "81, 82 or 83")->required()->check(CLI::IsMember({"81", "82", "83"}));
  sp_cmd->add_option("--m", m, "Exponent m >= 2")->check(CLI::Range(2, 64));
  sp_cmd->add_option("--radius", popt.radius, "Bump radius");
  sp_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  // Keep stdout clean for the JSON document when it goes there.
  std::ostream& text = json_path == "-" ? std::cerr : std::cout;
  try {
    if (analyze_cmd->parsed()) {
      AnalysisReport r = analyze(expr);
      print_analysis(text, r);
      emit(to_json(r, trace), json_path);
      return kOk;
    }
    if (decay_cmd->parsed()) {
      PuiseuxPoly phi = parse_expression(expr);
      Rational h;
      json j;
      if (expected_text.empty()) {
        AnalysisReport r = analyze(phi, expr);
        h = r.h;
        j = to_json(r, trace);
      } else {
        h = parse_rational(expected_text);
        j["input"] = expr;
      }
      dopt.lambda_max = parse_lambda(lmax);
      dopt.quadrature.threads = threads;
      ExponentFit fit = oscillatory_decay_fit(phi, h, dopt);
      print_fit(text, fit);
      j["verify"] = to_json(fit);
      for (const auto& w : fit.warnings) j["warnings"].push_back(w);
      emit(j, json_path);
      return fit.pass ? kOk : kNumeric;
    }
    if (sub_cmd->parsed()) {
      sopt.seed = seed;
      sopt.threads = threads;
      json j;
      ExponentFit fit;
      if (preset == "flat") {
        Rational h = expected_text.empty() ? Rational(2) : parse_rational(expected_text);
        j["input"] = "preset:flat";
        fit = sublevel_exponent_fit(flat_preset(alpha), h, sopt);
      } else {
        if (expr.empty()) throw CLI::RequiredError("expr");
        PuiseuxPoly phi = parse_expression(expr);
        Rational h;
        if (expected_text.empty()) {
          AnalysisReport r = analyze(phi, expr);
          h = r.h;
          j = to_json(r, trace);
        } else {
          h = parse_rational(expected_text);
          j["input"] = expr;
        }
        fit = sublevel_exponent_fit(phi, h, sopt);
      }
      print_fit(text, fit);
      j["verify"] = to_json(fit);
      for (const auto& w : fit.warnings) j["warnings"].push_back(w);
      emit(j, json_path);
      return fit.pass ? kOk : kNumeric;
    }
    if (sp_cmd->parsed()) {
      SmallParamKind k = kind == "81" ? SmallParamKind::separable
                         : kind == "82" ? SmallParamKind::cubic
                                        : SmallParamKind::cubic_uniform;
      popt.quadrature.threads = threads;
      SmallParamReport r = small_param_bound_check(k, m, popt);
      text << "kind " << kind << ", m = " << m << ": block maxima";
      for (double b : r.block_max) text << " " << b;
      text << "; " << (r.finite && r.stable ? "stable" : "NOT stable");
      if (r.sigma0_exponent) text << "; sigma = 0 decay exponent " << *r.sigma0_exponent;
      text << "\n";
      emit(json{{"verify", to_json(r)}}, json_path);
      return r.finite && r.stable ? kOk : kNumeric;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(error_json(e.code(), e.what(), e.offset()), json_path);
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SymbolicError& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(error_json("symbolic_error", e.what()), json_path);
    return kSymbolic;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(error_json("numeric_error", e.what()), json_path);
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(error_json("invalid_argument", e.what()), json_path);
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(error_json("domain_error", e.what()), json_path);
    return kSymbolic;
  }
  return kUsage;
}
