#pragma once

#include <stdexcept>
#include <string>

namespace flagsob {

/// Mismatched shapes: variable lists, dimensions, label kinds.
class structural_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation (poles,
/// non-integrable weights, invalid labels).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadrature produced a non-finite sample or failed to converge.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flagsob
