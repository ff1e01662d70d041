#pragma once

#include <vector>

#include "ehrenfest/process/ehrenfest_process.hpp"

namespace ehrenfest::shortrate {

using process::EhrenfestParams;

/// Short rate R_t = h X_t + r_m driven by an Ehrenfest process X on {0..N},
/// with step h = (r_M - r_m) / N. Rates are decimals (0.05, not 5).
///
/// r_M == r_m is admitted: h = 0 and the rate is the constant r_m.
class ShortRateModel {
 public:
  /// Throws ParameterError if r_max < r_min or either bound is not finite.
  ShortRateModel(EhrenfestParams ehrenfest, double r_min, double r_max);

  const EhrenfestParams& ehrenfest() const noexcept { return ehrenfest_; }
  int N() const noexcept { return ehrenfest_.N(); }
  double r_min() const noexcept { return r_min_; }
  double r_max() const noexcept { return r_max_; }
  double step() const noexcept { return step_; }
  bool degenerate() const noexcept { return step_ == 0.0; }

  /// r_k = h k + r_m.
  double rate(int k) const;
  /// All N + 1 grid rates, r_0 = r_m, r_N = r_M.
  std::vector<double> grid() const;

 private:
  EhrenfestParams ehrenfest_;
  double r_min_;
  double r_max_;
  double step_;
};

/// Relative tolerance on (r - r_m)/h for accepting a rate as a grid point.
inline constexpr double kGridTolerance = 1e-9;

/// k with r = r_k. Throws OffGridError (carrying the nearest state) when
/// (r - r_m)/h is not within kGridTolerance of an integer in 0..N.
int rate_to_state(double r, const ShortRateModel& model);

/// Nearest grid state to r, clipped to 0..N.
int snap_to_grid(double r, const ShortRateModel& model);

/// E[R_t | R_0 = r0] = h E[X_t | X_0 = k] + r_m.
double rate_mean(double r0, double t, const ShortRateModel& model);
/// Var[R_t | R_0 = r0] = h^2 Var[X_t | X_0 = k].
double rate_variance(double r0, double t, const ShortRateModel& model);

/// Long-run mean p r_M + (1 - p) r_m.
double mean_reversion_level(const ShortRateModel& model);
/// Long-run variance (r_M - r_m)^2 p (1 - p) / N.
double stationary_rate_variance(const ShortRateModel& model);

/// A sampled short-rate path (time, rate) pairs.
struct RatePath {
  std::vector<double> times;
  std::vector<double> rates;
};

/// Maps an Ehrenfest state path onto the rate grid.
RatePath to_rate_path(const process::PathSample& path, const ShortRateModel& model);

}  // namespace ehrenfest::shortrate
