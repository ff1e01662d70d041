#include "ehrenfest/specfun/combinatorics.hpp"

#include <cmath>
#include <limits>

namespace ehrenfest::specfun {

namespace {
constexpr int kExactBinomialLimit = 60;
}

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  if (n > kExactBinomialLimit) return std::exp(log_binomial(n, k));
  k = k < n - k ? k : n - k;
  double c = 1.0;
  // After step i, c == C(n-k+i, i).
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

double log_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double pochhammer(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x + i;
  return r;
}

double factorial(int n) {
  if (n < 0) return 0.0;
  if (n > 170) return std::numeric_limits<double>::infinity();
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace ehrenfest::specfun
