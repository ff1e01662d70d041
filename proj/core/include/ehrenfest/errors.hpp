#pragma once

#include <stdexcept>
#include <string>

namespace ehrenfest {

/// An argument lies outside the mathematical domain of an operation
/// (index out of range, negative time, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid model or series parameter (e.g. a forbidden hypergeometric
/// denominator, or alpha outside (0,1]).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rate is not on the model grid. Carries the nearest grid point.
class OffGridError : public std::domain_error {
 public:
  OffGridError(const std::string& what, int nearest_state, double nearest_rate)
      : std::domain_error(what), nearest_state_(nearest_state), nearest_rate_(nearest_rate) {}

  int nearest_state() const noexcept { return nearest_state_; }
  double nearest_rate() const noexcept { return nearest_rate_; }

 private:
  int nearest_state_;
  double nearest_rate_;
};

/// The request exceeds a configured capability (matrix size cap, ...).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The model does not satisfy the assumptions of the chosen pricer.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Truncated series produced a non-positive or non-finite value.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result file could not be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ehrenfest
