#pragma once

#include <span>

#include "ehrenfest/specfun/partition.hpp"

namespace ehrenfest::specfun {

/// Generalized Pochhammer symbol [a]_m = prod_j (a - j + 1)_{m_j}, j 1-based.
double gen_pochhammer(double a, const Partition& m);

/// A truncated series value with cheap error indicators.
struct SeriesValue {
  double value = 0.0;
  /// |sum of the terms of the highest retained degree|; estimates the
  /// truncation error once the series is in its decaying regime.
  double last_term = 0.0;
  /// Sum of |terms|; value has rounding error of order eps * abs_sum.
  double abs_sum = 0.0;
};

/// Truncated confluent hypergeometric function of matrix argument
///
///   1F1^H(a; b; z) = sum_{j=0}^{H} (1/j!) sum_{|m|=j, l(m)<=n} [a]_m/[b]_m Z_m(z),
///
/// where z holds the n eigenvalues (n = 0 gives 1). Repeated eigenvalues are
/// fine. Throws ParameterError when H < 0 or when -b + j - 1 is a
/// non-negative integer for some j in 1..n.
SeriesValue hyp1f1_matrix(double a, double b, std::span<const double> z, int H);

/// Default hypergeometric truncation order.
inline constexpr int kDefaultHypergeometricOrder = 30;

}  // namespace ehrenfest::specfun
