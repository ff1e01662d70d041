#pragma once

#include "ehrenfest/specfun/hypergeometric.hpp"

namespace ehrenfest::pricing {

/// Truncation orders of the bond-price series: M caps the outer series,
/// H the partition weight inside each 1F1 evaluation.
struct Truncation {
  int M = 10;
  int H = specfun::kDefaultHypergeometricOrder;

  /// Throws ParameterError on negative orders.
  void validate() const;

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

struct PriceResult {
  double price = 0.0;
  Truncation truncation;
  /// Estimated absolute error of `price` from the last retained outer term,
  /// the 1F1 tails and accumulated rounding.
  double error_estimate = 0.0;
  double wall_time_s = 0.0;
};

}  // namespace ehrenfest::pricing
