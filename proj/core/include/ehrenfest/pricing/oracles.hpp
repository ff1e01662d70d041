#pragma once

#include <cstddef>
#include <cstdint>

#include "ehrenfest/shortrate/short_rate_model.hpp"

namespace ehrenfest::pricing {

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

inline constexpr std::size_t kDefaultOracleCap = 400;

/// Feynman-Kac price on the finite chain: row k of exp((Q - D) tau) summed,
/// where Q is the birth-death generator and D = diag(r_0..r_N). Dense
/// scaling-and-squaring Pade exponential.
///
/// Throws CapabilityError when N > cap, OffGridError for off-grid r.
double price_fk_oracle(const shortrate::ShortRateModel& model, double t, double T, double r,
                       std::size_t cap = kDefaultOracleCap);

/// Monte Carlo price from exact event-driven paths with the rate integral
/// accumulated exactly between jumps. Path i uses Rng::derived(seed, i), so
/// the result depends only on (paths, seed).
McEstimate price_mc_oracle(const shortrate::ShortRateModel& model, double t, double T, double r,
                           int paths, std::uint64_t seed);

}  // namespace ehrenfest::pricing
