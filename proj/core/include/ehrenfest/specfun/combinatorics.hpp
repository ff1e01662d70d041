#pragma once

namespace ehrenfest::specfun {

/// Binomial coefficient C(n, k) as a double; 0 outside 0 <= k <= n.
/// Uses an exact multiplicative product for n <= 60 and log-gamma above.
double binomial(int n, int k);

/// log C(n, k); -inf outside 0 <= k <= n.
double log_binomial(int n, int k);

/// Rising factorial (x)_k = x (x+1) ... (x+k-1), (x)_0 = 1.
double pochhammer(double x, int k);

double factorial(int n);

}  // namespace ehrenfest::specfun
