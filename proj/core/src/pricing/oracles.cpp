#include "ehrenfest/pricing/oracles.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "ehrenfest/errors.hpp"
#include "ehrenfest/process/random.hpp"

namespace ehrenfest::pricing {

namespace {

double checked_tau(double t, double T) {
  if (!std::isfinite(t) || !std::isfinite(T)) throw DomainError("times must be finite");
  if (T < t) throw DomainError("maturity T must be >= valuation time t");
  return T - t;
}

}  // namespace

double price_fk_oracle(const shortrate::ShortRateModel& model, double t, double T, double r,
                       std::size_t cap) {
  const double tau = checked_tau(t, T);
  const int N = model.N();
  if (static_cast<std::size_t>(N) > cap) {
    throw CapabilityError("Feynman-Kac oracle supports N <= " + std::to_string(cap) + " (got " +
                          std::to_string(N) + ")");
  }
  const int k = shortrate::rate_to_state(r, model);
  if (tau == 0.0) return 1.0;
  if (model.degenerate()) return std::exp(-model.r_min() * tau);

  const auto rates = process::birth_death_rates(model.ehrenfest());
  const Eigen::Index n = N + 1;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i <= N; ++i) {
    const double up = rates.birth[i];
    const double down = rates.death[i];
    if (i < N) A(i, i + 1) = up * tau;
    if (i > 0) A(i, i - 1) = down * tau;
    A(i, i) = -(up + down + model.rate(i)) * tau;
  }
  const Eigen::MatrixXd E = A.exp();
  return E.row(k).sum();
}

McEstimate price_mc_oracle(const shortrate::ShortRateModel& model, double t, double T, double r,
                           int paths, std::uint64_t seed) {
  const double tau = checked_tau(t, T);
  if (paths < 2) throw ParameterError("paths must be >= 2");
  const int k0 = shortrate::rate_to_state(r, model);
  if (tau == 0.0) return {1.0, 0.0};
  if (model.degenerate()) return {std::exp(-model.r_min() * tau), 0.0};

  const auto& params = model.ehrenfest();
  double mean = 0.0;
  double m2 = 0.0;
  for (int i = 0; i < paths; ++i) {
    auto rng = process::Rng::derived(seed, static_cast<std::uint64_t>(i));
    int state = k0;
    double now = 0.0;
    // Integral of the state count; the rate integral is r_m tau + h * this.
    double occupation = 0.0;
    while (true) {
      const auto jump = process::next_jump(state, params, rng);
      if (now + jump.wait >= tau) {
        occupation += state * (tau - now);
        break;
      }
      occupation += state * jump.wait;
      now += jump.wait;
      state = jump.next;
    }
    const double d = std::exp(-(model.r_min() * tau + model.step() * occupation));
    const double delta = d - mean;
    mean += delta / (i + 1);
    m2 += delta * (d - mean);
  }
  return {mean, std::sqrt(m2 / (paths - 1) / paths)};
}

}  // namespace ehrenfest::pricing
