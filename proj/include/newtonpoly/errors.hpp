#pragma once

#include <stdexcept>
#include <string>

namespace newtonpoly {

/// Failure of an exact computation (irrational root, step budget, ...).
class SymbolicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure of a numeric procedure (quadrature budget, resolution, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace newtonpoly
