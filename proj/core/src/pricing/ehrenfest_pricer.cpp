#include "ehrenfest/pricing/ehrenfest_pricer.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ehrenfest/errors.hpp"
#include "ehrenfest/specfun/hypergeometric.hpp"
#include "ehrenfest/specfun/krawtchouk.hpp"

namespace ehrenfest::pricing {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_horizon(double t, double T) {
  if (!std::isfinite(t) || !std::isfinite(T)) throw DomainError("times must be finite");
  if (T < t) throw DomainError("maturity T must be >= valuation time t");
}

// One-ball factor and its absolute error estimate.
struct BallFactor {
  double value = 1.0;
  double error = 0.0;
};

// e^{-r_m tau} P_1^k P_0^{N-k}, with the relative error propagated linearly.
PriceResult assemble(double log_prefactor, const BallFactor& P1, const BallFactor& P0, int k,
                     int N, const Truncation& trunc) {
  const int rest = N - k;
  if ((k > 0 && !(P1.value > 0.0)) || (rest > 0 && !(P0.value > 0.0))) {
    throw TruncationError("truncated one-ball factor is not positive; increase M or H");
  }
  double log_price = log_prefactor;
  double rel = 0.0;
  if (k > 0) {
    log_price += k * std::log(P1.value);
    rel += k * P1.error / P1.value;
  }
  if (rest > 0) {
    log_price += rest * std::log(P0.value);
    rel += rest * P0.error / P0.value;
  }
  PriceResult res;
  res.price = std::exp(log_price);
  if (!std::isfinite(res.price)) throw TruncationError("bond price is not finite");
  res.truncation = trunc;
  res.error_estimate = res.price * (rel + (N + 2) * kEps);
  return res;
}

PriceResult trivial(double value, const Truncation& trunc) {
  PriceResult res;
  res.price = value;
  res.truncation = trunc;
  return res;
}

// Error contribution of one 1F1 value entering with weight `coef`.
double hyp_error(double coef, const specfun::SeriesValue& f) {
  return std::abs(coef) * (f.last_term + kEps * f.abs_sum);
}

}  // namespace

void Truncation::validate() const {
  if (M < 0) throw ParameterError("truncation M must be >= 0");
  if (H < 0) throw ParameterError("truncation H must be >= 0");
}

PriceResult price_general(const ShortRateModel& model, double t, double T, double r,
                          const Truncation& trunc) {
  const auto start = Clock::now();
  trunc.validate();
  check_horizon(t, T);
  const int k = shortrate::rate_to_state(r, model);
  const double tau = T - t;
  if (tau == 0.0) return trivial(1.0, trunc);
  if (model.degenerate()) {
    auto res = trivial(std::exp(-model.r_min() * tau), trunc);
    res.wall_time_s = seconds_since(start);
    return res;
  }

  const auto& params = model.ehrenfest();
  const specfun::KrawtchoukContext ball(1, params.p());
  // w[a][b] = pi_b B_{a,b}
  double w[2][2];
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) w[a][b] = ball.pi(b) * ball.B(a, b);
  }
  const double Ky[2][2] = {{ball(0, 0), ball(0, 1)}, {ball(1, 0), ball(1, 1)}};

  const double x = model.step() * tau;
  const double decay = -params.speed() * tau;
  const int M = trunc.M;

  // dp[last][ones]: summed tuple weight of all prefixes ending in `last`
  // with `ones` entries equal to 1.
  std::array<std::vector<double>, 2> dp{std::vector<double>(M + 1, 0.0),
                                        std::vector<double>(M + 1, 0.0)};
  dp[0][0] = 1.0;

  BallFactor P[2];
  double last_term[2] = {1.0, 1.0};
  double abs_sum[2] = {1.0, 1.0};
  double outer = 1.0;  // (-x)^n / n!
  std::vector<double> z;
  z.reserve(M);

  for (int n = 1; n <= M; ++n) {
    std::array<std::vector<double>, 2> next{std::vector<double>(M + 1, 0.0),
                                            std::vector<double>(M + 1, 0.0)};
    for (int last = 0; last < 2; ++last) {
      for (int ones = 0; ones < n; ++ones) {
        const double v = dp[last][ones];
        if (v == 0.0) continue;
        next[0][ones] += v * w[last][0];
        next[1][ones + 1] += v * w[last][1];
      }
    }
    dp = std::move(next);
    outer *= -x / n;

    double term[2] = {0.0, 0.0};
    for (int ones = 0; ones <= n; ++ones) {
      double S[2];
      for (int y = 0; y < 2; ++y) S[y] = Ky[y][0] * dp[0][ones] + Ky[y][1] * dp[1][ones];
      if (S[0] == 0.0 && S[1] == 0.0) continue;
      z.assign(static_cast<std::size_t>(ones), decay);
      z.resize(static_cast<std::size_t>(n), 0.0);
      const auto f = specfun::hyp1f1_matrix(1.0, n + 1.0, z, trunc.H);
      for (int y = 0; y < 2; ++y) {
        const double coef = outer * S[y];
        term[y] += coef * f.value;
        P[y].error += hyp_error(coef, f);
      }
    }
    for (int y = 0; y < 2; ++y) {
      P[y].value += term[y];
      last_term[y] = std::abs(term[y]);
      abs_sum[y] += std::abs(term[y]);
    }
  }
  for (int y = 0; y < 2; ++y) P[y].error += last_term[y] + kEps * abs_sum[y];

  auto res = assemble(-model.r_min() * tau, P[1], P[0], k, model.N(), trunc);
  res.wall_time_s = seconds_since(start);
  return res;
}

PriceResult price_symmetric(const ShortRateModel& model, double t, double T, double r,
                            const Truncation& trunc) {
  const auto start = Clock::now();
  trunc.validate();
  const auto& params = model.ehrenfest();
  if (params.alpha() != 1.0 || params.beta() != 1.0) {
    throw ModelError("symmetric pricer requires alpha = beta = 1 (got alpha = " +
                     std::to_string(params.alpha()) + ", beta = " + std::to_string(params.beta()) +
                     ")");
  }
  check_horizon(t, T);
  const int k = shortrate::rate_to_state(r, model);
  const double tau = T - t;
  if (tau == 0.0) return trivial(1.0, trunc);
  if (model.degenerate()) {
    auto res = trivial(std::exp(-model.r_min() * tau), trunc);
    res.wall_time_s = seconds_since(start);
    return res;
  }

  const double x = model.step() * tau;
  const double L = params.lambda() * tau;
  const double ex = std::exp(-x);
  const double logL = std::log(L);

  // Poisson(L) probability of j jumps.
  auto poisson = [&](int j) { return std::exp(-L + j * logL - std::lgamma(j + 1.0)); };

  BallFactor P1, P0;
  P1.value = P0.value = 0.0;
  double last1 = 0.0, last0 = 0.0;
  double abs1 = 0.0, abs0 = 0.0;
  std::vector<double> even, odd, even_neg, odd_neg;

  for (int n = 0; n <= trunc.M; ++n) {
    // h tau (0,1,...,0,1) in R^{2n} and h tau (1,0,1,...,0,1) in R^{2n+1}
    even.assign(2 * n, 0.0);
    for (int i = 1; i < 2 * n; i += 2) even[i] = x;
    odd.assign(2 * n + 1, 0.0);
    for (int i = 0; i < 2 * n + 1; i += 2) odd[i] = x;
    even_neg = even;
    for (auto& v : even_neg) v = -v;
    odd_neg = odd;
    for (auto& v : odd_neg) v = -v;

    const double w_even = poisson(2 * n);
    const double w_odd = poisson(2 * n + 1);
    const auto f_even = specfun::hyp1f1_matrix(1.0, 2.0 * n + 1.0, even, trunc.H);
    const auto f_even_neg = specfun::hyp1f1_matrix(1.0, 2.0 * n + 1.0, even_neg, trunc.H);
    const auto f_odd = specfun::hyp1f1_matrix(1.0, 2.0 * n + 2.0, odd, trunc.H);
    const auto f_odd_neg = specfun::hyp1f1_matrix(1.0, 2.0 * n + 2.0, odd_neg, trunc.H);

    const double t1 = w_even * ex * f_even.value + w_odd * f_odd_neg.value;
    const double t0 = w_even * f_even_neg.value + w_odd * ex * f_odd.value;
    P1.value += t1;
    P0.value += t0;
    P1.error += hyp_error(w_even * ex, f_even) + hyp_error(w_odd, f_odd_neg);
    P0.error += hyp_error(w_even, f_even_neg) + hyp_error(w_odd * ex, f_odd);
    last1 = std::abs(t1);
    last0 = std::abs(t0);
    abs1 += last1;
    abs0 += last0;
  }
  // Every bracket is bounded by its Poisson mass, so the omitted part of
  // either factor is at most P(J >= 2M + 2).
  double tail = 0.0;
  for (int j = 2 * trunc.M + 2;; ++j) {
    const double pj = poisson(j);
    tail += pj;
    if (j > L && pj <= kEps * tail) break;
  }
  P1.error += std::max(last1, tail) + kEps * abs1;
  P0.error += std::max(last0, tail) + kEps * abs0;

  // e^{-lambda N tau} is carried by the Poisson weights, one e^{-L} per ball.
  auto res = assemble(-model.r_min() * tau, P1, P0, k, model.N(), trunc);
  res.wall_time_s = seconds_since(start);
  return res;
}

}  // namespace ehrenfest::pricing
