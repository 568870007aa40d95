#pragma once

#include <stdexcept>
#include <string>

namespace fuzzsphere {

/// Argument outside the mathematical domain of an operation (negative spin,
/// parity mismatch, |m| > j, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadrature integrand returned NaN or Inf at some node.
class NonFiniteSample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape disagreement between operators.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fuzzsphere
