#pragma once

#include "newtonpoly/puiseux.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace newtonpoly::numeric {

/// Dense bivariate polynomial with coefficient matrix C, C(i, j) multiplying
/// x1^i x2^j. Used on the numeric side where ordinary polynomials are
/// evaluated many times per panel.
template <typename Scalar>
class DensePoly {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  DensePoly() : c_(Matrix::Zero(1, 1)) {}
  explicit DensePoly(Matrix coeffs) : c_(std::move(coeffs)) {
    if (c_.rows() == 0 || c_.cols() == 0) c_ = Matrix::Zero(1, 1);
  }

  static DensePoly from_puiseux(const PuiseuxPoly& phi) {
    if (!phi.is_ordinary()) throw std::domain_error("dense form needs integer x1-exponents");
    Matrix c = Matrix::Zero(to_long(phi.degree_x1()) + 1, phi.degree_x2() + 1);
    for (const auto& [e, coef] : phi.terms()) {
      c(to_long(e.e1), e.e2) = static_cast<Scalar>(to_double(coef));
    }
    return DensePoly(std::move(c));
  }

  const Matrix& coeffs() const { return c_; }
  Eigen::Index degree_x1() const { return c_.rows() - 1; }
  Eigen::Index degree_x2() const { return c_.cols() - 1; }

  Scalar operator()(Scalar x1, Scalar x2) const {
    Scalar acc = 0;
    for (Eigen::Index i = c_.rows() - 1; i >= 0; --i) {
      Scalar row = 0;
      for (Eigen::Index j = c_.cols() - 1; j >= 0; --j) row = row * x2 + c_(i, j);
      acc = acc * x1 + row;
    }
    return acc;
  }

  /// The polynomial (u, v) -> p(c1 + u, c2 + v).
  DensePoly shifted(Scalar c1, Scalar c2) const {
    return DensePoly(shift_matrix(c_.rows(), c1) * c_ * shift_matrix(c_.cols(), c2).transpose());
  }

  /// Bounds of |d/dx1 p| and |d/dx2 p| on [-h1, h1] x [-h2, h2].
  std::pair<Scalar, Scalar> gradient_bounds(Scalar h1, Scalar h2) const {
    Scalar g1 = 0;
    Scalar g2 = 0;
    Scalar p1 = 1;  // h1^(i-1) for i >= 1
    for (Eigen::Index i = 0; i < c_.rows(); ++i) {
      Scalar p2 = 1;
      Scalar p2m = 1;  // h2^(j-1)
      for (Eigen::Index j = 0; j < c_.cols(); ++j) {
        Scalar a = std::abs(c_(i, j));
        if (i > 0) g1 += a * Scalar(i) * p1 * p2;
        if (j > 0) {
          g2 += a * Scalar(j) * (i == 0 ? Scalar(1) : p1 * h1) * p2m;
          p2m *= h2;
        }
        p2 *= h2;
      }
      if (i > 0) p1 *= h1;
    }
    return {g1, g2};
  }

 private:
  // S(k, i) = binom(i, k) c^(i - k): coefficients of (x + c)^i.
  static Matrix shift_matrix(Eigen::Index n, Scalar c) {
    Matrix s = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      s(i, i) = 1;
      for (Eigen::Index k = i - 1; k >= 0; --k) {
        // binom(i, k) c^(i-k) from binom(i, k+1) c^(i-k-1)
        s(k, i) = s(k + 1, i) * c * Scalar(k + 1) / Scalar(i - k);
      }
    }
    return s;
  }

  Matrix c_;
};

}  // namespace newtonpoly::numeric
