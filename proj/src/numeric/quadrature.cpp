#include "newtonpoly/numeric/quadrature.hpp"

#include "newtonpoly/errors.hpp"
#include "newtonpoly/numeric/gauss_legendre.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>
#include <vector>

namespace newtonpoly::numeric {

double Bump::profile(double s) {
  double s2 = s * s;
  if (s2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - s2));
}

double Bump::operator()(double x1, double x2) const {
  if (shape == Shape::tensor) return profile(x1 / radius) * profile(x2 / radius);
  return profile(std::hypot(x1, x2) / radius);
}

bool Bump::outside(const Box& b) const {
  if (b.x1 <= -radius || b.x0 >= radius || b.y1 <= -radius || b.y0 >= radius) return true;
  if (shape == Shape::tensor) return false;
  double dx = std::max({b.x0, -b.x1, 0.0});
  double dy = std::max({b.y0, -b.y1, 0.0});
  return dx * dx + dy * dy >= radius * radius;
}

std::array<double, 2> PolyPhase::variation(const Box& b) const {
  double h1 = 0.5 * b.width();
  double h2 = 0.5 * b.height();
  DensePoly<double> local = p_.shifted(0.5 * (b.x0 + b.x1), 0.5 * (b.y0 + b.y1));
  auto [g1, g2] = local.gradient_bounds(h1, h2);
  return {g1 * h1, g2 * h2};
}

PuiseuxPhase::PuiseuxPhase(const PuiseuxPoly& phi) {
  for (const auto& [e, c] : phi.terms()) {
    terms_.push_back(Term{to_double(c), to_double(e.e1), static_cast<int>(e.e2)});
  }
}

double PuiseuxPhase::value(double x1, double x2) const {
  if (x1 < 0) throw std::domain_error("ramified phase evaluated at x1 < 0");
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.c * std::pow(x1, t.e1) * std::pow(x2, t.e2);
  return sum;
}

std::array<double, 2> PuiseuxPhase::variation(const Box& b) const {
  if (b.x0 < 0) throw std::domain_error("ramified phase needs x1 >= 0");
  std::array<double, 2> v{0.0, 0.0};
  for (const auto& t : terms_) {
    double ua = std::pow(b.x0, t.e1);
    double ub = std::pow(b.x1, t.e1);
    double vc = std::pow(b.y0, t.e2);
    double vd = std::pow(b.y1, t.e2);
    double vmax = std::max(std::abs(vc), std::abs(vd));
    double vmin;
    if (t.e2 == 0) {
      vmin = vmax;
    } else if (t.e2 % 2 == 0) {
      vmin = (b.y0 <= 0 && b.y1 >= 0) ? 0.0 : std::min(std::abs(vc), std::abs(vd));
    } else {
      vmin = vc;
      vmax = vd;
    }
    double vabs = std::max(std::abs(vc), std::abs(vd));
    v[0] += std::abs(t.c) * (ub - ua) * vabs;
    v[1] += std::abs(t.c) * ub * (vmax - vmin);
  }
  return v;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(n);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

namespace {

struct PanelIntegrator {
  const Phase& phase;
  const Bump& bump;
  double lambda;
  double limit;  // pi / density
  const GaussRule& rule;
  std::size_t max_panels;
  std::atomic<std::size_t>& panels;

  std::complex<double> leaf(const Box& b) const {
    const std::size_t n = rule.nodes.size();
    double cx = 0.5 * (b.x0 + b.x1), hx = 0.5 * b.width();
    double cy = 0.5 * (b.y0 + b.y1), hy = 0.5 * b.height();
    double xs[32], ys[32], bx[32], by[32];
    for (std::size_t k = 0; k < n; ++k) {
      xs[k] = cx + hx * rule.nodes[k];
      ys[k] = cy + hy * rule.nodes[k];
      if (bump.shape == Bump::Shape::tensor) {
        bx[k] = Bump::profile(xs[k] / bump.radius);
        by[k] = Bump::profile(ys[k] / bump.radius);
      }
    }
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (bump.shape == Bump::Shape::tensor && bx[i] == 0.0) continue;
      std::complex<double> row = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        double amp = bump.shape == Bump::Shape::tensor ? bx[i] * by[j] : bump(xs[i], ys[j]);
        if (amp == 0.0) continue;
        double arg = lambda * phase.value(xs[i], ys[j]);
        row += rule.weights[j] * amp * std::complex<double>(std::cos(arg), std::sin(arg));
      }
      sum += rule.weights[i] * row;
    }
    return sum * (hx * hy);
  }

  std::complex<double> integrate(const Box& b) const {
    if (bump.outside(b)) return 0.0;
    if (lambda != 0.0) {
      auto v = phase.variation(b);
      if (std::abs(lambda) * (v[0] + v[1]) > limit) {
        if (panels.fetch_add(1) >= max_panels) throw NumericError("quadrature budget exceeded");
        if (b.width() < 1e-13 && b.height() < 1e-13) throw NumericError("quadrature budget exceeded");
        if (v[0] >= v[1]) {
          double m = 0.5 * (b.x0 + b.x1);
          return integrate(Box{b.x0, m, b.y0, b.y1}) + integrate(Box{m, b.x1, b.y0, b.y1});
        }
        double m = 0.5 * (b.y0 + b.y1);
        return integrate(Box{b.x0, b.x1, b.y0, m}) + integrate(Box{b.x0, b.x1, m, b.y1});
      }
    }
    panels.fetch_add(1);
    return leaf(b);
  }
};

}  // namespace

std::complex<double> oscillatory_integral(const Phase& phase, const Bump& bump, const Box& domain,
                                          double lambda, const QuadratureOptions& options,
                                          QuadratureStats* stats) {
  if (options.order < 1 || options.order > 32) throw std::invalid_argument("quadrature order out of range");
  static thread_local int cached_order = 0;
  static thread_local GaussRule rule;
  if (cached_order != options.order) {
    rule = gauss_legendre(options.order);
    cached_order = options.order;
  }
  std::atomic<std::size_t> panels{0};
  PanelIntegrator integrator{phase, bump, lambda, std::numbers::pi / options.density, rule,
                             options.max_panels, panels};
  const int nc = std::max(1, options.coarse);
  std::vector<std::complex<double>> cell(static_cast<std::size_t>(nc) * nc);
  double dx = domain.width() / nc;
  double dy = domain.height() / nc;
  parallel_for(cell.size(), options.threads, [&](std::size_t idx) {
    int i = static_cast<int>(idx) / nc;
    int j = static_cast<int>(idx) % nc;
    Box b{domain.x0 + i * dx, domain.x0 + (i + 1) * dx, domain.y0 + j * dy, domain.y0 + (j + 1) * dy};
    cell[idx] = integrator.integrate(b);
  });
  std::complex<double> total = 0.0;
  for (const auto& c : cell) total += c;
  if (stats) stats->panels = panels.load();
  return total;
}

}  // namespace newtonpoly::numeric
