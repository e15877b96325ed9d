#pragma once

#include <stdexcept>
#include <string>

namespace eplab {

/// Raised when a caller supplies parameters outside an operation's domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an integration or update cannot proceed (NaN, step underflow,
/// CFL violation).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The fluid support reached the outer edge of the computational ball.
class SupportHitBoundary : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eplab
