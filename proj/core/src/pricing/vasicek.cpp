#include "ehrenfest/pricing/vasicek.hpp"

#include <cmath>

#include "ehrenfest/errors.hpp"
#include "ehrenfest/process/random.hpp"

namespace ehrenfest::pricing {

void VasicekParams::validate() const {
  if (!std::isfinite(k) || !std::isfinite(theta) || !std::isfinite(sigma) || !std::isfinite(r0)) {
    throw ParameterError("Vasicek parameters must be finite");
  }
  if (!(k > 0.0)) throw ParameterError("Vasicek k must be > 0");
  if (!(sigma > 0.0)) throw ParameterError("Vasicek sigma must be > 0");
}

double price_vasicek(const VasicekParams& params, double t, double T, double r) {
  params.validate();
  if (!std::isfinite(t) || !std::isfinite(T) || !std::isfinite(r)) {
    throw DomainError("times and rate must be finite");
  }
  if (T < t) throw DomainError("maturity T must be >= valuation time t");
  const double tau = T - t;
  const double k = params.k;
  const double s2 = params.sigma * params.sigma;
  const double B = -std::expm1(-k * tau) / k;
  const double logA = (params.theta - s2 / (2.0 * k * k)) * (B - tau) - s2 / (4.0 * k) * B * B;
  return std::exp(logA - B * r);
}

VasicekMapping vasicek_to_ehrenfest(const VasicekParams& params, int N,
                                    IntensityConvention convention) {
  params.validate();
  if (N < 1) throw ParameterError("N must be >= 1");
  const double lambda = convention == IntensityConvention::MomentMatched ? params.k / 2.0 : 0.5;
  const double half_width = params.sigma * std::sqrt(N / (2.0 * params.k));
  const process::EhrenfestParams ehr(N, lambda, 1.0, 1.0);
  shortrate::ShortRateModel model(ehr, params.theta - half_width, params.theta + half_width);
  return VasicekMapping{model, ehr.speed(), convention};
}

shortrate::RatePath simulate_vasicek_path(const VasicekParams& params, double horizon, int steps,
                                          std::uint64_t seed) {
  process::Rng rng(seed);
  return simulate_vasicek_path(params, horizon, steps, rng);
}

shortrate::RatePath simulate_vasicek_path(const VasicekParams& params, double horizon, int steps,
                                          process::Rng& rng) {
  params.validate();
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw DomainError("horizon must be > 0");
  if (steps < 1) throw ParameterError("steps must be >= 1");
  const double dt = horizon / steps;
  const double sdt = std::sqrt(dt);
  shortrate::RatePath path;
  path.times.reserve(steps + 1);
  path.rates.reserve(steps + 1);
  double r = params.r0;
  path.times.push_back(0.0);
  path.rates.push_back(r);
  for (int i = 1; i <= steps; ++i) {
    r += params.k * (params.theta - r) * dt + params.sigma * sdt * rng.normal();
    path.times.push_back(i == steps ? horizon : i * dt);
    path.rates.push_back(r);
  }
  return path;
}

McEstimate price_vasicek_mc(const VasicekParams& params, double t, double T, double r, int paths,
                            int steps, std::uint64_t seed) {
  params.validate();
  if (T < t) throw DomainError("maturity T must be >= valuation time t");
  if (paths < 2) throw ParameterError("paths must be >= 2");
  if (steps < 1) throw ParameterError("steps must be >= 1");
  const double tau = T - t;
  if (tau == 0.0) return {1.0, 0.0};
  const double dt = tau / steps;
  const double sdt = std::sqrt(dt);
  double mean = 0.0;
  double m2 = 0.0;
  for (int i = 0; i < paths; ++i) {
    auto rng = process::Rng::derived(seed, static_cast<std::uint64_t>(i));
    double x = r;
    double integral = 0.0;
    for (int s = 0; s < steps; ++s) {
      const double next = x + params.k * (params.theta - x) * dt + params.sigma * sdt * rng.normal();
      integral += 0.5 * (x + next) * dt;
      x = next;
    }
    const double d = std::exp(-integral);
    const double delta = d - mean;
    mean += delta / (i + 1);
    m2 += delta * (d - mean);
  }
  return {mean, std::sqrt(m2 / (paths - 1) / paths)};
}

}  // namespace ehrenfest::pricing
