#pragma once

#include <vector>

namespace newtonpoly::numeric {

/// n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
/// Legendre recurrence, weights 2 v0^2 from the normalized eigenvectors.
GaussRule gauss_legendre(int n);

}  // namespace newtonpoly::numeric
