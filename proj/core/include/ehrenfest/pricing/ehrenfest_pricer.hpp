#pragma once

#include "ehrenfest/pricing/truncation.hpp"
#include "ehrenfest/shortrate/short_rate_model.hpp"

namespace ehrenfest::pricing {

using shortrate::ShortRateModel;

/// Zero-coupon bond price at t for maturity T given R_t = r, any alpha, beta.
///
/// Each ball contributes a factor P_y = E[exp(-h int Y ds) | Y_t = y], and
///
///   P(t,T) = e^{-r_m tau} P_1^k P_0^{N-k},   tau = T - t,  k = (r - r_m)/h,
///   P_y    = 1 + sum_{n=1}^{M} (-h tau)^n / n!
///              sum_{i in {0,1}^n} K_y(i_n) prod_j w(i_{j-1}, i_j) 1F1^H(1; n+1; -c tau i),
///
/// with i_0 = 0, c = lambda (alpha + beta) and w(a, b) = pi_b B_{a,b} from the
/// single-ball (N = 1) Krawtchouk system: w = p, -p, -q, q for 00, 01, 10, 11.
/// The 2^n tuples are folded into (last index, number of ones) classes since
/// 1F1 only depends on how many entries of z are non-zero.
///
/// Throws DomainError if T < t, OffGridError if r is not a grid rate.
PriceResult price_general(const ShortRateModel& model, double t, double T, double r,
                          const Truncation& trunc = {});

/// Same price for the alpha = beta = 1 model, where each ball flips at every
/// clock ring and P_y reduces to a Poisson mixture over even/odd jump counts:
///
///   P(t,T) = e^{-(r_m + lambda N) tau} P_1^k P_0^{N-k}
///
/// with P_1, P_0 the series over n = 0..M of (lambda tau)^{2n}/(2n)! times
/// pairs of 1F1^H values at h tau (0,1,...,0,1) and h tau (1,0,1,...,0,1).
/// Evaluated with the e^{-lambda tau} factor folded into Poisson weights.
///
/// Throws ModelError unless alpha == beta == 1.
PriceResult price_symmetric(const ShortRateModel& model, double t, double T, double r,
                            const Truncation& trunc = {});

}  // namespace ehrenfest::pricing
