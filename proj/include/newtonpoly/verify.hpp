#pragma once

#include "newtonpoly/numeric/quadrature.hpp"
#include "newtonpoly/puiseux.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace newtonpoly {

struct ExponentFit {
  std::string kind;              // "decay" or "sublevel"
  std::vector<double> grid;      // lambda or epsilon, increasing
  std::vector<double> values;    // |J(lambda)| or sublevel measure
  std::size_t fit_from = 0;      // first grid index used by the fit
  double fitted_exponent = 0.0;  // plain power-law slope
  std::optional<double> fitted_with_log;
  std::optional<double> fitted_coarse;  // sublevel: same fit on the coarse count
  bool use_log = false;          // which fitted value decides pass
  Rational expected;             // -1/h or 1/h
  double tolerance = 0.1;
  bool pass = false;
  double residual = 0.0;
  std::vector<std::string> warnings;

  double decisive() const { return use_log ? fitted_with_log.value_or(fitted_exponent) : fitted_exponent; }
};

struct DecayOptions {
  double radius = 0.5;
  double lambda_min = 16.0;
  double lambda_max = 2048.0;
  int points_per_decade = 4;
  double tolerance = 0.1;
  bool loglog = false;
  bool mirror = false;      // replace phi(x1, x2) by phi(-x1, x2) first
  bool half_plane = false;  // integrate over x1 >= 0 only (forced for ramified phi)
  numeric::QuadratureOptions quadrature;
};

/// |J(lambda)| on a geometric grid and a power-law fit over its top half.
ExponentFit oscillatory_decay_fit(const PuiseuxPoly& phi, const Rational& expected_h, const DecayOptions& opt);

/// lambda_max * 10^(-k / points_per_decade) down to lambda_min, increasing.
std::vector<double> decay_grid(double lambda_min, double lambda_max, int points_per_decade);

struct SublevelOptions {
  double window = 1.0;  // box [-window, window]^2 (x1 >= 0 half when half_plane)
  double eps_min = 1e-4;
  double eps_max = 1e-1;
  int points_per_decade = 4;
  int n = 4096;         // cells per side for the coarse count; the fine count uses 2n
  std::uint64_t seed = 20240611;
  bool log_model = false;
  bool half_plane = false;
  double tolerance = 0.1;
  unsigned threads = 0;
};

using PointFunction = std::function<double(double, double)>;

/// Area of {x in box : |f(x)| < eps_k} for each eps_k (increasing), by one
/// uniformly jittered sample per cell of an n x n grid.
std::vector<double> sublevel_measure(const PointFunction& f, const numeric::Box& box,
                                     const std::vector<double>& eps, int n, std::uint64_t seed,
                                     unsigned threads = 0);

/// Geometric epsilon grid between eps_min and eps_max, increasing.
std::vector<double> sublevel_grid(double eps_min, double eps_max, int points_per_decade);

ExponentFit sublevel_exponent_fit(const PuiseuxPoly& phi, const Rational& expected_h, const SublevelOptions& opt);
ExponentFit sublevel_exponent_fit(const PointFunction& f, const Rational& expected_h, const SublevelOptions& opt);

/// x2^2 + exp(-|x1|^(-alpha)), a flat phase whose sublevel exponent is 1/2.
PointFunction flat_preset(double alpha);

/// separable: x1^2 + s x2^m. cubic: x1^3 + s (x2^m + x1 x2). cubic_uniform: the cubic
/// family (x1^3 + s x2^2 for m = 2) against an envelope uniform in s.
enum class SmallParamKind { separable, cubic, cubic_uniform };

const char* to_string(SmallParamKind kind);

struct SmallParamOptions {
  int lambda_log2_min = 4;
  int lambda_log2_max = 12;
  int sigma_log2_min = -8;
  double radius = 0.5;
  double eps_hat = 0.02;
  numeric::QuadratureOptions quadrature;
};

struct SmallParamReport {
  SmallParamKind kind = SmallParamKind::separable;
  int m = 2;
  std::vector<double> lambdas;
  std::vector<double> sigmas;               // first entry is 0
  std::vector<std::vector<double>> values;  // |J|, indexed [sigma][lambda]
  std::vector<std::vector<double>> ratios;  // |J| times the envelope
  double alpha = 0.0;                       // lambda exponent of the envelope
  double beta = 0.0;                        // sigma exponent of the envelope
  std::vector<double> block_max;            // max ratio per block of three octaves
  bool finite = true;
  bool stable = false;
  std::optional<double> sigma0_exponent;    // fitted decay of the sigma = 0 row
};

/// Phase of the given family at parameter sigma as a dense polynomial.
numeric::DensePoly<double> small_param_phase(SmallParamKind kind, int m, double sigma);

/// Envelope exponents (alpha, beta) of the claimed bound.
std::pair<double, double> small_param_envelope(SmallParamKind kind, int m, double eps_hat);

SmallParamReport small_param_bound_check(SmallParamKind kind, int m, const SmallParamOptions& opt);

}  // namespace newtonpoly
