#include "newtonpoly/verify.hpp"

#include "newtonpoly/errors.hpp"
#include "newtonpoly/numeric/regression.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <tuple>

namespace newtonpoly {

using numeric::Box;

namespace {

constexpr double kUnderflow = 1e-13;

std::size_t top_half_start(std::size_t n) { return n - (n + 1) / 2; }

void fill_fits(ExponentFit& fit, const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> xs(x.begin() + fit.fit_from, x.end());
  std::vector<double> ys(y.begin() + fit.fit_from, y.end());
  auto plain = numeric::fit_power_law(xs, ys, false);
  fit.fitted_exponent = plain.exponent;
  fit.residual = plain.residual_rms;
  if (xs.size() >= 4) {
    auto with_log = numeric::fit_power_law(xs, ys, true);
    fit.fitted_with_log = with_log.exponent;
    if (fit.use_log) fit.residual = with_log.residual_rms;
  } else if (fit.use_log) {
    fit.warnings.push_back("too few points for the log-corrected model; plain slope used");
  }
  fit.pass = std::abs(fit.decisive() - to_double(fit.expected)) <= fit.tolerance;
}

}  // namespace

std::vector<double> decay_grid(double lambda_min, double lambda_max, int points_per_decade) {
  if (!(lambda_min > 1.0) || !(lambda_max > lambda_min) || points_per_decade < 1) {
    throw std::invalid_argument("invalid lambda grid");
  }
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    double l = lambda_max * std::pow(10.0, -static_cast<double>(k) / points_per_decade);
    if (l < lambda_min * (1 - 1e-12)) break;
    grid.push_back(l);
  }
  std::reverse(grid.begin(), grid.end());
  return grid;
}

ExponentFit oscillatory_decay_fit(const PuiseuxPoly& phi_in, const Rational& expected_h, const DecayOptions& opt) {
  if (sgn(expected_h) <= 0) throw std::invalid_argument("expected height must be positive");
  ExponentFit fit;
  fit.kind = "decay";
  fit.expected = -1 / expected_h;
  fit.tolerance = opt.tolerance;
  fit.use_log = opt.loglog;

  PuiseuxPoly phi = opt.mirror ? mirror_x1(phi_in) : phi_in;
  bool half = opt.half_plane;
  if (!phi.is_ordinary() && !half) {
    half = true;
    fit.warnings.push_back("ramified phase: integrating over x1 >= 0 only");
  }
  std::unique_ptr<numeric::Phase> phase;
  if (phi.is_ordinary()) {
    phase = std::make_unique<numeric::PolyPhase>(phi);
  } else {
    phase = std::make_unique<numeric::PuiseuxPhase>(phi);
  }
  numeric::Bump bump{opt.radius, numeric::Bump::Shape::radial};
  Box domain = bump.support();
  if (half) domain.x0 = 0.0;

  std::vector<double> grid = decay_grid(opt.lambda_min, opt.lambda_max, opt.points_per_decade);
  for (double lambda : grid) {
    double v = std::abs(numeric::oscillatory_integral(*phase, bump, domain, lambda, opt.quadrature));
    if (v < kUnderflow) {
      fit.warnings.push_back("measurement underflow; grid truncated");
      break;
    }
    fit.grid.push_back(lambda);
    fit.values.push_back(v);
  }
  if (fit.grid.size() < 3) throw NumericError("measurement underflow");
  fit.fit_from = top_half_start(fit.grid.size());
  fill_fits(fit, fit.grid, fit.values);
  return fit;
}

std::vector<double> sublevel_grid(double eps_min, double eps_max, int points_per_decade) {
  if (!(eps_min > 0) || !(eps_max > eps_min) || !(eps_max < 1) || points_per_decade < 1) {
    throw std::invalid_argument("invalid epsilon grid");
  }
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    double e = eps_max * std::pow(10.0, -static_cast<double>(k) / points_per_decade);
    if (e < eps_min * (1 - 1e-12)) break;
    grid.push_back(e);
  }
  std::reverse(grid.begin(), grid.end());
  return grid;
}

std::vector<double> sublevel_measure(const PointFunction& f, const Box& box, const std::vector<double>& eps,
                                     int n, std::uint64_t seed, unsigned threads) {
  if (n < 1) throw std::invalid_argument("sublevel grid must have at least one cell");
  if (!std::is_sorted(eps.begin(), eps.end())) throw std::invalid_argument("epsilon grid must increase");
  const std::size_t k = eps.size();
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(k + 1, 0));
  const double dx = box.width() / n;
  const double dy = box.height() / n;
  numeric::parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(n)};
    std::mt19937_64 gen(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto& count = rows[i];
    for (int j = 0; j < n; ++j) {
      double x1 = box.x0 + (static_cast<double>(i) + unit(gen)) * dx;
      double x2 = box.y0 + (static_cast<double>(j) + unit(gen)) * dy;
      double v = std::abs(f(x1, x2));
      count[std::upper_bound(eps.begin(), eps.end(), v) - eps.begin()]++;
    }
  });
  std::vector<std::uint64_t> total(k + 1, 0);
  for (const auto& r : rows) {
    for (std::size_t t = 0; t <= k; ++t) total[t] += r[t];
  }
  std::vector<double> out(k);
  std::uint64_t cum = 0;
  for (std::size_t t = 0; t < k; ++t) {
    cum += total[t];
    out[t] = static_cast<double>(cum) * dx * dy;
  }
  return out;
}

ExponentFit sublevel_exponent_fit(const PointFunction& f, const Rational& expected_h, const SublevelOptions& opt) {
  if (sgn(expected_h) <= 0) throw std::invalid_argument("expected height must be positive");
  ExponentFit fit;
  fit.kind = "sublevel";
  fit.expected = 1 / expected_h;
  fit.tolerance = opt.tolerance;
  fit.use_log = opt.log_model;
  Box box{-opt.window, opt.window, -opt.window, opt.window};
  if (opt.half_plane) box.x0 = 0.0;
  fit.grid = sublevel_grid(opt.eps_min, opt.eps_max, opt.points_per_decade);
  std::vector<double> coarse = sublevel_measure(f, box, fit.grid, opt.n, opt.seed, opt.threads);
  fit.values = sublevel_measure(f, box, fit.grid, 2 * opt.n, opt.seed, opt.threads);
  if (fit.values.front() <= 0.0 || coarse.front() <= 0.0 ||
      std::abs(coarse.front() - fit.values.front()) > 0.1 * fit.values.front()) {
    throw NumericError("resolution insufficient");
  }
  fill_fits(fit, fit.grid, fit.values);
  ExponentFit rough = fit;
  fill_fits(rough, fit.grid, coarse);
  fit.fitted_coarse = rough.decisive();
  return fit;
}

ExponentFit sublevel_exponent_fit(const PuiseuxPoly& phi, const Rational& expected_h, const SublevelOptions& opt) {
  SublevelOptions o = opt;
  if (!phi.is_ordinary()) o.half_plane = true;
  PointFunction f;
  if (phi.is_ordinary()) {
    auto p = std::make_shared<numeric::DensePoly<double>>(numeric::DensePoly<double>::from_puiseux(phi));
    f = [p](double x1, double x2) { return (*p)(x1, x2); };
  } else {
    auto p = std::make_shared<numeric::PuiseuxPhase>(phi);
    f = [p](double x1, double x2) { return p->value(x1, x2); };
  }
  ExponentFit fit = sublevel_exponent_fit(f, expected_h, o);
  if (o.half_plane && !opt.half_plane) fit.warnings.push_back("ramified phase: counting over x1 >= 0 only");
  return fit;
}

PointFunction flat_preset(double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  return [alpha](double x1, double x2) {
    double a = std::abs(x1);
    double flat = a == 0.0 ? 0.0 : std::exp(-std::pow(a, -alpha));
    return x2 * x2 + flat;
  };
}

const char* to_string(SmallParamKind kind) {
  switch (kind) {
    case SmallParamKind::separable: return "81";
    case SmallParamKind::cubic: return "82";
    case SmallParamKind::cubic_uniform: return "83";
  }
  return "?";
}

numeric::DensePoly<double> small_param_phase(SmallParamKind kind, int m, double sigma) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  using Matrix = numeric::DensePoly<double>::Matrix;
  Matrix c = Matrix::Zero(4, m + 1);
  if (kind == SmallParamKind::separable) {
    c(2, 0) = 1.0;
    c(0, m) = sigma;
    return numeric::DensePoly<double>(c);
  }
  c(3, 0) = 1.0;
  c(0, m) += sigma;
  bool mixed = !(kind == SmallParamKind::cubic_uniform && m == 2);
  if (mixed) c(1, 1) += sigma;
  return numeric::DensePoly<double>(c);
}

std::pair<double, double> small_param_envelope(SmallParamKind kind, int m, double eps_hat) {
  switch (kind) {
    case SmallParamKind::separable: return {0.5, 1.0 / m};
    case SmallParamKind::cubic: return {1.0 / 3.0, 0.5};
    case SmallParamKind::cubic_uniform: {
      double l = m < 6 ? 1.0 / 6.0 : (m - 3.0) / (2.0 * (2.0 * m - 3.0));
      double c = m < 6 ? 1.0 : 2.0;
      return {0.5 + eps_hat, l + c * eps_hat};
    }
  }
  return {0.0, 0.0};
}

SmallParamReport small_param_bound_check(SmallParamKind kind, int m, const SmallParamOptions& opt) {
  SmallParamReport rep;
  rep.kind = kind;
  rep.m = m;
  std::tie(rep.alpha, rep.beta) = small_param_envelope(kind, m, opt.eps_hat);
  for (int k = opt.lambda_log2_min; k <= opt.lambda_log2_max; ++k) rep.lambdas.push_back(std::ldexp(1.0, k));
  rep.sigmas.push_back(0.0);
  for (int k = opt.sigma_log2_min; k <= 0; ++k) rep.sigmas.push_back(std::ldexp(1.0, k));

  numeric::Bump bump{opt.radius, numeric::Bump::Shape::tensor};
  for (double sigma : rep.sigmas) {
    numeric::PolyPhase phase(small_param_phase(kind, m, sigma));
    std::vector<double> vals, ratios;
    for (double lambda : rep.lambdas) {
      double v = std::abs(numeric::oscillatory_integral(phase, bump, bump.support(), lambda, opt.quadrature));
      double env = kind == SmallParamKind::cubic_uniform
                       ? std::pow(lambda, rep.alpha) * std::pow(std::abs(sigma), rep.beta)
                       : std::pow(1 + lambda, rep.alpha) * std::pow(1 + std::abs(lambda * sigma), rep.beta);
      vals.push_back(v);
      ratios.push_back(v * env);
      if (!std::isfinite(v * env)) rep.finite = false;
    }
    rep.values.push_back(std::move(vals));
    rep.ratios.push_back(std::move(ratios));
  }

  // Blocks of three consecutive octaves in lambda.
  for (std::size_t start = 0; start < rep.lambdas.size(); start += 3) {
    double mx = 0.0;
    for (std::size_t li = start; li < std::min(start + 3, rep.lambdas.size()); ++li) {
      for (const auto& row : rep.ratios) mx = std::max(mx, row[li]);
    }
    rep.block_max.push_back(mx);
  }
  if (rep.block_max.size() >= 2) {
    double top = rep.block_max.back();
    double prev = rep.block_max[rep.block_max.size() - 2];
    rep.stable = rep.finite && top <= 3.0 * prev;
  }

  const auto& row0 = rep.values.front();
  std::size_t from = top_half_start(rep.lambdas.size());
  std::vector<double> xs(rep.lambdas.begin() + from, rep.lambdas.end());
  std::vector<double> ys(row0.begin() + from, row0.end());
  if (std::all_of(ys.begin(), ys.end(), [](double v) { return v > kUnderflow; })) {
    rep.sigma0_exponent = numeric::fit_power_law(xs, ys, false).exponent;
  }
  return rep;
}

}  // namespace newtonpoly
