#pragma once

#include <cstdint>

#include "ehrenfest/pricing/oracles.hpp"
#include "ehrenfest/process/random.hpp"
#include "ehrenfest/shortrate/short_rate_model.hpp"

namespace ehrenfest::pricing {

/// dr = k (theta - r) dt + sigma dW, r(0) = r0.
struct VasicekParams {
  double k = 0.0;
  double theta = 0.0;
  double sigma = 0.0;
  double r0 = 0.0;

  /// Throws ParameterError unless k > 0 and sigma > 0 (all finite).
  void validate() const;
};

/// A(t,T) exp(-B(t,T) r), B = (1 - e^{-k(T-t)})/k,
/// A = exp((theta - sigma^2/(2k^2)) (B - T + t) - sigma^2/(4k) B^2).
double price_vasicek(const VasicekParams& params, double t, double T, double r);

/// How the per-ball intensity is chosen when mapping Vasicek onto E(1,1).
enum class IntensityConvention {
  /// lambda (alpha + beta) = k: matches the e^{-kt} mean decay (lambda = k/2).
  MomentMatched,
  /// lambda = alpha / (alpha + beta) = 1/2 as literally stated for the
  /// weak-convergence theorem; decay speed 1 regardless of k.
  Literal,
};

struct VasicekMapping {
  shortrate::ShortRateModel model;
  /// lambda (alpha + beta) of the mapped model.
  double speed;
  IntensityConvention convention;
};

/// Symmetric model with alpha = beta = 1 and
/// r_m, r_M = theta -/+ sigma sqrt(N / (2k)); its stationary mean is theta and
/// stationary variance sigma^2 / (2k).
VasicekMapping vasicek_to_ehrenfest(const VasicekParams& params, int N,
                                    IntensityConvention convention = IntensityConvention::MomentMatched);

/// Euler-Maruyama path on a uniform grid of `steps` intervals over [0, horizon],
/// starting at params.r0.
shortrate::RatePath simulate_vasicek_path(const VasicekParams& params, double horizon, int steps,
                                          std::uint64_t seed);

/// Same, drawing from a caller-owned generator.
shortrate::RatePath simulate_vasicek_path(const VasicekParams& params, double horizon, int steps,
                                          process::Rng& rng);

/// Euler-Maruyama Monte Carlo of E[exp(-int_t^T r ds) | r(t) = r] with
/// trapezoidal time integration. Path i uses Rng::derived(seed, i).
McEstimate price_vasicek_mc(const VasicekParams& params, double t, double T, double r, int paths,
                            int steps, std::uint64_t seed);

}  // namespace ehrenfest::pricing
