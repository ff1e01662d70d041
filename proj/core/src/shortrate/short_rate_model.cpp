#include "ehrenfest/shortrate/short_rate_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ehrenfest/errors.hpp"

namespace ehrenfest::shortrate {

ShortRateModel::ShortRateModel(EhrenfestParams ehrenfest, double r_min, double r_max)
    : ehrenfest_(ehrenfest), r_min_(r_min), r_max_(r_max), step_(0.0) {
  if (!std::isfinite(r_min) || !std::isfinite(r_max)) {
    throw ParameterError("rate bounds must be finite");
  }
  if (r_max < r_min) throw ParameterError("r_M must be >= r_m");
  step_ = (r_max - r_min) / ehrenfest_.N();
}

double ShortRateModel::rate(int k) const {
  if (k < 0 || k > N()) throw DomainError("grid index outside 0..N");
  if (k == N()) return r_max_;
  return step_ * k + r_min_;
}

std::vector<double> ShortRateModel::grid() const {
  std::vector<double> g(N() + 1);
  for (int k = 0; k <= N(); ++k) g[k] = rate(k);
  return g;
}

int snap_to_grid(double r, const ShortRateModel& model) {
  if (model.degenerate()) return 0;
  const double pos = std::round((r - model.r_min()) / model.step());
  return static_cast<int>(std::clamp(pos, 0.0, static_cast<double>(model.N())));
}

int rate_to_state(double r, const ShortRateModel& model) {
  const int nearest = snap_to_grid(r, model);
  bool on_grid;
  if (model.degenerate()) {
    on_grid = std::abs(r - model.r_min()) <= kGridTolerance * std::max(1.0, std::abs(r));
  } else {
    const double pos = (r - model.r_min()) / model.step();
    on_grid = std::abs(pos - nearest) <= kGridTolerance * std::max(1.0, std::abs(pos));
  }
  if (!on_grid) {
    std::ostringstream os;
    os.precision(17);
    os << "rate " << r << " is not on the model grid; nearest grid point is r_" << nearest
       << " = " << model.rate(nearest);
    throw OffGridError(os.str(), nearest, model.rate(nearest));
  }
  return nearest;
}

double rate_mean(double r0, double t, const ShortRateModel& model) {
  const int k = rate_to_state(r0, model);
  return model.step() * process::conditional_mean(k, t, model.ehrenfest()) + model.r_min();
}

double rate_variance(double r0, double t, const ShortRateModel& model) {
  const int k = rate_to_state(r0, model);
  const double h = model.step();
  return h * h * process::conditional_variance(k, t, model.ehrenfest());
}

double mean_reversion_level(const ShortRateModel& model) {
  const double p = model.ehrenfest().p();
  return p * model.r_max() + (1.0 - p) * model.r_min();
}

double stationary_rate_variance(const ShortRateModel& model) {
  const double p = model.ehrenfest().p();
  const double w = model.r_max() - model.r_min();
  return w * w * p * (1.0 - p) / model.N();
}

RatePath to_rate_path(const process::PathSample& path, const ShortRateModel& model) {
  RatePath out;
  out.times = path.times;
  out.rates.reserve(path.states.size());
  for (int s : path.states) out.rates.push_back(model.rate(s));
  return out;
}

}  // namespace ehrenfest::shortrate
