#include "ehrenfest/process/ehrenfest_process.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ehrenfest/errors.hpp"
#include "ehrenfest/specfun/krawtchouk.hpp"

namespace ehrenfest::process {

namespace {

void check_time(double t) {
  if (!(t >= 0.0)) throw DomainError("time must be >= 0, got " + std::to_string(t));
}

void check_state(int i, const EhrenfestParams& params, const char* name) {
  if (i < 0 || i > params.N()) {
    throw DomainError(std::string("state ") + name + " = " + std::to_string(i) + " outside 0.." +
                      std::to_string(params.N()));
  }
}

}  // namespace

EhrenfestParams::EhrenfestParams(int N, double lambda, double alpha, double beta)
    : N_(N), lambda_(lambda), alpha_(alpha), beta_(beta) {
  if (N < 1) throw ParameterError("N must be >= 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ParameterError("lambda must be > 0");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in (0,1]");
  if (!(beta > 0.0 && beta <= 1.0)) throw ParameterError("beta must lie in (0,1]");
}

BirthDeathRates birth_death_rates(const EhrenfestParams& params) {
  const int N = params.N();
  BirthDeathRates r;
  r.birth.resize(N + 1);
  r.death.resize(N + 1);
  for (int i = 0; i <= N; ++i) {
    r.birth[i] = params.lambda() * params.alpha() * (N - i);
    r.death[i] = params.lambda() * params.beta() * i;
  }
  return r;
}

Matrix2 binary_semigroup(double t, const EhrenfestParams& params) {
  check_time(t);
  const double p = params.p();
  const double q = params.q();
  const double e = std::exp(-params.speed() * t);
  return {{{q + p * e, p - p * e}, {q - q * e, p + q * e}}};
}

namespace {

// Law of Binomial(n, a) by the multiplicative recurrence, exact at a = 0 and a = 1.
std::vector<double> binomial_pmf(int n, double a) {
  std::vector<double> pmf(n + 1, 0.0);
  if (a <= 0.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  if (a >= 1.0) {
    pmf[n] = 1.0;
    return pmf;
  }
  const double log_a = std::log(a);
  const double log_b = std::log1p(-a);
  for (int k = 0; k <= n; ++k) {
    const double log_c = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    pmf[k] = std::exp(log_c + k * log_a + (n - k) * log_b);
  }
  return pmf;
}

// The state at t is the sum of i binaries started in 1 and N - i started in 0,
// so its law is the convolution of two binomials. This equals the Krawtchouk
// spectral sum but has no cancellation.
std::vector<double> transition_row(int i, double t, const EhrenfestParams& params) {
  const auto P = binary_semigroup(t, params);
  const auto from_one = binomial_pmf(i, P[1][1]);
  const auto from_zero = binomial_pmf(params.N() - i, P[0][1]);
  std::vector<double> row(params.N() + 1, 0.0);
  for (std::size_t a = 0; a < from_one.size(); ++a) {
    for (std::size_t b = 0; b < from_zero.size(); ++b) row[a + b] += from_one[a] * from_zero[b];
  }
  return row;
}

}  // namespace

double transition_prob(int i, int j, double t, const EhrenfestParams& params) {
  check_state(i, params, "i");
  check_state(j, params, "j");
  check_time(t);
  return transition_row(i, t, params)[j];
}

std::vector<double> transition_matrix(double t, const EhrenfestParams& params) {
  check_time(t);
  const int n = params.N() + 1;
  std::vector<double> P;
  P.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const auto row = transition_row(i, t, params);
    P.insert(P.end(), row.begin(), row.end());
  }
  return P;
}

double conditional_mean(int i, double t, const EhrenfestParams& params) {
  check_state(i, params, "i");
  check_time(t);
  const double Np = params.N() * params.p();
  return Np - (Np - i) * std::exp(-params.speed() * t);
}

double conditional_variance(int i, double t, const EhrenfestParams& params) {
  check_state(i, params, "i");
  check_time(t);
  const double p = params.p();
  const double q = params.q();
  const int N = params.N();
  const double e = std::exp(-params.speed() * t);
  // Sum of i binaries started in 1 and N - i started in 0.
  const double v = (1.0 - e) * (N * p * q + e * (i * q * q + (N - i) * p * p));
  return v < 0.0 ? 0.0 : v;
}

std::vector<double> stationary_pmf(const EhrenfestParams& params) {
  const specfun::KrawtchoukContext K(params.N(), params.p());
  return {K.omegas().begin(), K.omegas().end()};
}

Jump next_jump(int state, const EhrenfestParams& params, Rng& rng) {
  const double up = params.lambda() * params.alpha() * (params.N() - state);
  const double down = params.lambda() * params.beta() * state;
  const double total = up + down;
  const double wait = rng.exponential(total);
  const int next = (rng.uniform() * total < up) ? state + 1 : state - 1;
  return {wait, next};
}

PathSample simulate_path(int i0, double horizon, const EhrenfestParams& params, std::uint64_t seed) {
  Rng rng(seed);
  return simulate_path(i0, horizon, params, rng);
}

PathSample simulate_path(int i0, double horizon, const EhrenfestParams& params, Rng& rng) {
  check_state(i0, params, "i0");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw DomainError("simulation horizon must be > 0");
  }
  PathSample path;
  path.horizon = horizon;
  path.times.push_back(0.0);
  path.states.push_back(i0);
  double t = 0.0;
  int state = i0;
  for (;;) {
    const Jump jump = next_jump(state, params, rng);
    t += jump.wait;
    if (t > horizon) break;
    state = jump.next;
    path.times.push_back(t);
    path.states.push_back(state);
  }
  return path;
}

int state_at(const PathSample& path, double t) {
  const auto it = std::upper_bound(path.times.begin(), path.times.end(), t);
  if (it == path.times.begin()) return path.states.front();
  return path.states[static_cast<std::size_t>(std::distance(path.times.begin(), it)) - 1];
}

}  // namespace ehrenfest::process
