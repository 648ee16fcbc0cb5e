#pragma once

#include "newtonpoly/adapt.hpp"
#include "newtonpoly/homog.hpp"
#include "newtonpoly/newton.hpp"
#include "newtonpoly/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace newtonpoly {

struct PrincipalPartSummary {
  PuiseuxPoly poly;
  std::optional<FactoredHomog> factored;  // compact principal face only
  std::optional<D2Report> d2;
};

struct AnalysisReport {
  std::string input;
  PuiseuxPoly phi;
  NewtonData newton;
  AdaptednessVerdict verdict;  // original coordinates
  AdaptedResult adapted;
  RootJet jet;
  PrincipalPartSummary principal;
  Rational h;
  Rational beta;   // 1/h
  Rational gamma;  // 1/h
  std::vector<std::string> warnings;
};

/// Full symbolic pipeline on a parsed polynomial.
AnalysisReport analyze(const PuiseuxPoly& phi, const std::string& input = "");
/// Parses and analyzes.
AnalysisReport analyze(const std::string& text);

/// Rationals as "p/q" (or "p") strings, doubles rounded to 12 significant digits.
nlohmann::json json_rational(const Rational& r);
nlohmann::json json_double(double v);

nlohmann::json to_json(const AnalysisReport& report, bool trace);
nlohmann::json to_json(const ExponentFit& fit);
nlohmann::json to_json(const SmallParamReport& report);

}  // namespace newtonpoly
