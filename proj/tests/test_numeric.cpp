#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newtonpoly/numeric/dense_poly.hpp"
#include "newtonpoly/numeric/gauss_legendre.hpp"
#include "newtonpoly/numeric/quadrature.hpp"
#include "newtonpoly/numeric/regression.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace newtonpoly;
using namespace newtonpoly::numeric;

namespace {

PuiseuxPoly x1() { return PuiseuxPoly::variable(Variable::x1); }
PuiseuxPoly x2() { return PuiseuxPoly::variable(Variable::x2); }

double uniform(oracle::Rng& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

}  // namespace

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  for (int n : {1, 2, 5, 8, 12}) {
    GaussRule rule = gauss_legendre(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double sum = 0;
      for (int i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
      double exact = k % 2 == 1 ? 0.0 : 2.0 / (k + 1);
      CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
    }
    for (std::size_t i = 1; i < rule.nodes.size(); ++i) CHECK(rule.nodes[i - 1] < rule.nodes[i]);
  }
  GaussRule two = gauss_legendre(2);
  CHECK(two.nodes[1] == doctest::Approx(1 / std::sqrt(3.0)));
  CHECK(two.weights[0] == doctest::Approx(1.0));
}

TEST_CASE("dense polynomial evaluation and Taylor shift") {
  oracle::Rng g(61);
  for (int i = 0; i < 100; ++i) {
    PuiseuxPoly phi = oracle::random_poly(g, 8, 7);
    auto p = DensePoly<double>::from_puiseux(phi);
    double c1 = uniform(g, -1, 1), c2 = uniform(g, -1, 1);
    auto s = p.shifted(c1, c2);
    for (int k = 0; k < 5; ++k) {
      double u = uniform(g, -0.5, 0.5), v = uniform(g, -0.5, 0.5);
      double expected = evaluate_real(phi, c1 + u, c2 + v);
      CHECK(p(c1 + u, c2 + v) == doctest::Approx(expected).epsilon(1e-9).scale(1.0));
      CHECK(s(u, v) == doctest::Approx(expected).epsilon(1e-9).scale(1.0));
    }
  }
  // The shift is exact for integer data in long double as well.
  Eigen::Matrix<long double, 2, 2> c;
  c << 0, 1, 1, 0;  // x1 + x2
  DensePoly<long double> lin(c);
  auto sh = lin.shifted(2, 3);
  CHECK(sh.coeffs()(0, 0) == 5);
  CHECK(sh.coeffs()(1, 0) == 1);
  CHECK(sh.coeffs()(0, 1) == 1);
}

TEST_CASE("property: gradient bounds dominate sampled derivatives") {
  oracle::Rng g(62);
  for (int i = 0; i < 100; ++i) {
    PuiseuxPoly phi = oracle::random_poly(g, 8, 7);
    auto p = DensePoly<double>::from_puiseux(phi);
    auto d1 = DensePoly<double>::from_puiseux(partial_derivative(phi, Variable::x1));
    auto d2 = DensePoly<double>::from_puiseux(partial_derivative(phi, Variable::x2));
    double h1 = uniform(g, 0.01, 0.5), h2 = uniform(g, 0.01, 0.5);
    auto [b1, b2] = p.gradient_bounds(h1, h2);
    for (int k = 0; k < 20; ++k) {
      double u = uniform(g, -h1, h1), v = uniform(g, -h2, h2);
      CHECK(std::abs(d1(u, v)) <= b1 * (1 + 1e-12) + 1e-300);
      CHECK(std::abs(d2(u, v)) <= b2 * (1 + 1e-12) + 1e-300);
    }
  }
}

TEST_CASE("property: phase variation bounds") {
  oracle::Rng g(63);
  for (int i = 0; i < 100; ++i) {
    PuiseuxPoly phi = oracle::random_poly(g, 6, 6);
    PolyPhase poly(phi);
    PuiseuxPoly ram = phi + PuiseuxPoly::monomial(oracle::uniform_int(g, -3, 3), newtonpoly::make_rational(7, 3), 1);
    PuiseuxPhase pui(ram);
    double x0 = uniform(g, 0, 0.8), y0 = uniform(g, -0.8, 0.8);
    Box b{x0, x0 + uniform(g, 0.001, 0.2), y0, y0 + uniform(g, 0.001, 0.2)};
    double cx = 0.5 * (b.x0 + b.x1), cy = 0.5 * (b.y0 + b.y1);
    auto vp = poly.variation(b);
    auto vq = pui.variation(b);
    for (int k = 0; k < 20; ++k) {
      double u = uniform(g, b.x0, b.x1), v = uniform(g, b.y0, b.y1);
      CHECK(std::abs(poly.value(u, v) - poly.value(cx, cy)) <= (vp[0] + vp[1]) * (1 + 1e-9) + 1e-14);
      CHECK(std::abs(pui.value(u, v) - pui.value(cx, cy)) <= (vq[0] + vq[1]) * (1 + 1e-9) + 1e-14);
      CHECK(pui.value(u, v) == doctest::Approx(evaluate_real(ram, u, v)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("phase variation bounds vanish with the box") {
  PuiseuxPoly phi = pow(x2(), 2) + PuiseuxPoly::monomial(1, newtonpoly::make_rational(5, 2), 0) +
                    PuiseuxPoly::monomial(-2, newtonpoly::make_rational(3, 2), 1);
  PuiseuxPhase pui(phi);
  PolyPhase poly(pow(x2(), 2) + pow(x1(), 5));
  for (Box b : {Box{0, 0.5, -0.5, 0.5}, Box{0.1, 0.3, -0.2, 0.1}}) {
    for (int k = 0; k < 30; ++k) {
      b.x1 = 0.5 * (b.x0 + b.x1);
      b.y1 = 0.5 * (b.y0 + b.y1);
    }
    auto v = pui.variation(b);
    auto w = poly.variation(b);
    CHECK(v[0] + v[1] < 1e-8);
    CHECK(w[0] + w[1] < 1e-8);
  }
}

TEST_CASE("ramified phase on the half-plane matches a uniform tensor rule") {
  PuiseuxPoly phi = pow(x2(), 2) + PuiseuxPoly::monomial(1, newtonpoly::make_rational(5, 2), 0);
  PuiseuxPhase phase(phi);
  Bump bump{0.5, Bump::Shape::radial};
  Box half{0, 0.5, -0.5, 0.5};
  auto j = oscillatory_integral(phase, bump, half, 100.0, QuadratureOptions{});
  auto ref = oracle::uniform_oscillatory([&](double a, double b) { return evaluate_real(phi, a, b); },
                                         [&](double a, double b) { return bump(a, b); }, 0, 0.5, -0.5, 0.5, 100.0,
                                         200);
  CHECK(std::abs(j - ref) < 1e-6);
}

TEST_CASE("bump shapes") {
  Bump radial{0.5, Bump::Shape::radial};
  Bump tensor{0.5, Bump::Shape::tensor};
  CHECK(radial(0, 0) == 1.0);
  CHECK(radial(0.3, 0.4) == 0.0);
  CHECK(radial(0.3, 0) == doctest::Approx(oracle::bump1(0.3, 0.5)));
  CHECK(tensor(0.3, 0.2) == doctest::Approx(oracle::bump1(0.3, 0.5) * oracle::bump1(0.2, 0.5)));
  CHECK(radial.outside(Box{0.4, 0.6, 0.4, 0.6}));
  CHECK_FALSE(tensor.outside(Box{0.4, 0.6, 0.4, 0.6}));
}

TEST_CASE("adaptive quadrature matches a uniform tensor rule") {
  PuiseuxPoly phi = pow(x2(), 2) + pow(x1(), 3) + x1() * x2();
  PolyPhase phase(phi);
  Bump bump{0.5, Bump::Shape::radial};
  for (double lambda : {0.0, 10.0, 200.0}) {
    auto j = oscillatory_integral(phase, bump, bump.support(), lambda, QuadratureOptions{});
    auto ref = oracle::uniform_oscillatory([&](double a, double b) { return evaluate_real(phi, a, b); },
                                           [&](double a, double b) { return bump(a, b); }, -0.5, 0.5, -0.5, 0.5,
                                           lambda, 160);
    CHECK(std::abs(j - ref) < 1e-8);
  }
}

TEST_CASE("quadrature is bitwise independent of the thread count") {
  PolyPhase phase(pow(x2() - pow(x1(), 2), 2) + pow(x1(), 5));
  Bump bump{0.5, Bump::Shape::radial};
  QuadratureOptions one;
  one.threads = 1;
  QuadratureOptions four = one;
  four.threads = 4;
  auto a = oscillatory_integral(phase, bump, bump.support(), 700.0, one);
  auto b = oscillatory_integral(phase, bump, bump.support(), 700.0, four);
  CHECK(a.real() == b.real());
  CHECK(a.imag() == b.imag());
}

TEST_CASE("panel budget") {
  PolyPhase phase(pow(x1(), 2) + pow(x2(), 2));
  Bump bump{0.5, Bump::Shape::radial};
  QuadratureOptions tight;
  tight.max_panels = 100;
  CHECK_THROWS(oscillatory_integral(phase, bump, bump.support(), 1e5, tight));
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 3, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK(resolve_threads(5) == 5);
  CHECK(resolve_threads(0) >= 1);
}

TEST_CASE("regression recovers planted exponents") {
  std::vector<double> x, y, z;
  for (int k = 0; k < 20; ++k) {
    double t = std::pow(2.0, 4 + 0.4 * k);
    x.push_back(t);
    y.push_back(3.0 * std::pow(t, -0.7));
    z.push_back(0.5 * std::pow(t, -0.5) * std::log(t));
  }
  PowerLawFit plain = fit_power_law(x, y, false);
  CHECK(plain.exponent == doctest::Approx(-0.7).epsilon(1e-10));
  CHECK(std::exp(plain.intercept) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(plain.residual_rms < 1e-10);
  CHECK_FALSE(plain.log_coefficient);

  PowerLawFit with_log = fit_power_law(x, z, true);
  CHECK(with_log.exponent == doctest::Approx(-0.5).epsilon(1e-9));
  REQUIRE(with_log.log_coefficient);
  CHECK(*with_log.log_coefficient == doctest::Approx(1.0).epsilon(1e-9));

  Eigen::MatrixXd X(3, 2);
  X << 1, 0, 0, 1, 1, 1;
  Eigen::VectorXd v(3);
  v << 1, 2, 3;
  LinearFit lf = least_squares(X, v);
  CHECK(lf.coef(0) == doctest::Approx(1));
  CHECK(lf.coef(1) == doctest::Approx(2));
}
