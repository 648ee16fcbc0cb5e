#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace newtonpoly::numeric {

struct LinearFit {
  Eigen::VectorXd coef;
  double residual_rms = 0.0;
};

/// Least squares for y ~ X coef (column-pivoting QR).
LinearFit least_squares(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

struct PowerLawFit {
  double exponent = 0.0;
  double intercept = 0.0;
  std::optional<double> log_coefficient;  // coefficient of log|log x|
  double residual_rms = 0.0;
};

/// Fits log y = exponent * log x + intercept, optionally adding a
/// log|log x| regressor. Requires x > 0, y > 0 and x != 1.
PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y, bool log_term);

}  // namespace newtonpoly::numeric
