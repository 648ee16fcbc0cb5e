#pragma once

#include "newtonpoly/numeric/dense_poly.hpp"
#include "newtonpoly/puiseux.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <functional>

namespace newtonpoly::numeric {

struct Box {
  double x0, x1;  // first coordinate range
  double y0, y1;  // second coordinate range
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

/// Smooth cut-off equal to 1 at the origin: exp(1 - 1/(1 - s^2)) for s < 1.
/// Radial uses s = |x| / r; tensor is the product of the 1D profiles in each
/// coordinate.
struct Bump {
  enum class Shape { radial, tensor };
  double radius = 0.5;
  Shape shape = Shape::radial;

  static double profile(double s);
  double operator()(double x1, double x2) const;
  /// True when the bump vanishes on the whole box.
  bool outside(const Box& b) const;
  Box support() const { return Box{-radius, radius, -radius, radius}; }
};

/// Real phase with a bound on how much it can move inside a box.
class Phase {
 public:
  virtual ~Phase() = default;
  virtual double value(double x1, double x2) const = 0;
  /// Bounds (v1, v2) with |phase(x) - phase(center)| <= v1 + v2 on the box;
  /// v1 is the part due to the first coordinate, v2 to the second.
  virtual std::array<double, 2> variation(const Box& b) const = 0;
};

/// Ordinary polynomial phase; bounds come from a Taylor shift to the box center.
class PolyPhase : public Phase {
 public:
  explicit PolyPhase(DensePoly<double> p) : p_(std::move(p)) {}
  explicit PolyPhase(const PuiseuxPoly& phi) : p_(DensePoly<double>::from_puiseux(phi)) {}
  double value(double x1, double x2) const override { return p_(x1, x2); }
  std::array<double, 2> variation(const Box& b) const override;

 private:
  DensePoly<double> p_;
};

/// Phase with rational x1-exponents, valid on x1 >= 0. Bounds are built from
/// the monotone pieces of each monomial.
class PuiseuxPhase : public Phase {
 public:
  explicit PuiseuxPhase(const PuiseuxPoly& phi);
  double value(double x1, double x2) const override;
  std::array<double, 2> variation(const Box& b) const override;

 private:
  struct Term {
    double c;
    double e1;
    int e2;
  };
  std::vector<Term> terms_;
};

struct QuadratureOptions {
  /// Panels are refined until lambda * (v1 + v2) <= pi / density.
  double density = 1.0;
  int coarse = 32;  // coarse cells per side
  int order = 8;    // Gauss-Legendre points per panel side
  std::size_t max_panels = 20'000'000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct QuadratureStats {
  std::size_t panels = 0;
};

/// J(lambda) = integral of exp(i lambda phase) * bump over the domain, by
/// composite tensor Gauss-Legendre on adaptively refined panels. Cell sums
/// are combined in a fixed order, so the result does not depend on threads.
std::complex<double> oscillatory_integral(const Phase& phase, const Bump& bump, const Box& domain,
                                          double lambda, const QuadratureOptions& options,
                                          QuadratureStats* stats = nullptr);

unsigned resolve_threads(unsigned requested);

/// Runs body(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace newtonpoly::numeric
