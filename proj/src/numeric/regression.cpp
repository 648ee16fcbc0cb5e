#include "newtonpoly/numeric/regression.hpp"

#include <cmath>
#include <stdexcept>

namespace newtonpoly::numeric {

LinearFit least_squares(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  if (X.rows() != y.size() || X.rows() < X.cols()) {
    throw std::invalid_argument("least squares needs at least as many rows as unknowns");
  }
  LinearFit fit;
  fit.coef = X.colPivHouseholderQr().solve(y);
  Eigen::VectorXd r = y - X * fit.coef;
  fit.residual_rms = std::sqrt(r.squaredNorm() / static_cast<double>(r.size()));
  return fit;
}

PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y, bool log_term) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_power_law: size mismatch");
  const Eigen::Index n = static_cast<Eigen::Index>(x.size());
  const Eigen::Index cols = log_term ? 3 : 2;
  Eigen::MatrixXd X(n, cols);
  Eigen::VectorXd Y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(x[i] > 0) || !(y[i] > 0) || x[i] == 1.0) throw std::domain_error("fit_power_law: invalid sample");
    double lx = std::log(x[i]);
    X(i, 0) = lx;
    X(i, cols - 1) = 1.0;
    if (log_term) X(i, 1) = std::log(std::abs(lx));
    Y(i) = std::log(y[i]);
  }
  LinearFit f = least_squares(X, Y);
  PowerLawFit out;
  out.exponent = f.coef(0);
  out.intercept = f.coef(cols - 1);
  if (log_term) out.log_coefficient = f.coef(1);
  out.residual_rms = f.residual_rms;
  return out;
}

}  // namespace newtonpoly::numeric
