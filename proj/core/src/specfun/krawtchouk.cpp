#include "ehrenfest/specfun/krawtchouk.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "ehrenfest/errors.hpp"
#include "ehrenfest/specfun/combinatorics.hpp"

namespace ehrenfest::specfun {

namespace {
constexpr int kLogSpaceThreshold = 60;
}

KrawtchoukContext::KrawtchoukContext(int N, double p) : N_(N), p_(p), q_(1.0 - p) {
  if (N < 1) throw ParameterError("Krawtchouk: N must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("Krawtchouk: p must lie in (0,1)");
  omega_.resize(N + 1);
  pi_.resize(N + 1);
  if (N <= kLogSpaceThreshold) {
    for (int x = 0; x <= N; ++x) {
      omega_[x] = binomial(N, x) * std::pow(p_, x) * std::pow(q_, N - x);
      pi_[x] = binomial(N, x) * std::pow(p_ / q_, x);
    }
    return;
  }
  const double lp = std::log(p_);
  const double lq = std::log(q_);
  for (int x = 0; x <= N; ++x) {
    omega_[x] = std::exp(log_binomial(N, x) + x * lp + (N - x) * lq);
    pi_[x] = std::exp(log_binomial(N, x) + x * (lp - lq));
  }
}

void KrawtchoukContext::check_index(int i, const char* name) const {
  if (i < 0 || i > N_) {
    throw DomainError(std::string("Krawtchouk: index ") + name + " = " + std::to_string(i) +
                      " outside 0.." + std::to_string(N_));
  }
}

double KrawtchoukContext::omega(int x) const {
  check_index(x, "x");
  return omega_[x];
}

double KrawtchoukContext::pi(int l) const {
  check_index(l, "l");
  return pi_[l];
}

double KrawtchoukContext::operator()(int l, int x) const {
  check_index(l, "l");
  check_index(x, "x");
  if (l == 0 || x == 0) return 1.0;
  const int kmax = l < x ? l : x;
  const double ratio = q_ / p_;
  double sum = 0.0;
  if (N_ <= kLogSpaceThreshold) {
    double rk = 1.0;
    for (int k = 0; k <= kmax; ++k) {
      const double term = binomial(N_ - x, l - k) * binomial(x, k) * rk;
      sum += (k % 2 == 0) ? term : -term;
      rk *= ratio;
    }
    return sum / binomial(N_, l);
  }
  const double lr = std::log(ratio);
  const double norm = log_binomial(N_, l);
  for (int k = 0; k <= kmax; ++k) {
    if (l - k > N_ - x) continue;
    const double term = std::exp(log_binomial(N_ - x, l - k) + log_binomial(x, k) + k * lr - norm);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

double KrawtchoukContext::hypergeometric_form(int l, int x) const {
  check_index(l, "l");
  check_index(x, "x");
  const int kmax = l < x ? l : x;
  long double sum = 0.0L;
  long double term = 1.0L;
  const long double inv_p = 1.0L / static_cast<long double>(p_);
  for (int k = 0; k <= kmax; ++k) {
    sum += term;
    if (k == kmax) break;
    term *= static_cast<long double>(-l + k) * static_cast<long double>(-x + k) /
            (static_cast<long double>(-N_ + k) * static_cast<long double>(k + 1)) * inv_p;
  }
  return static_cast<double>(sum);
}

double KrawtchoukContext::B(int m, int l) const {
  check_index(m, "m");
  check_index(l, "l");
  if (std::abs(m - l) >= 2) return 0.0;
  if (m == l) return ((N_ - l) * p_ + l * q_) / pi_[l];
  const int hi = m > l ? m : l;
  return -hi * q_ / pi_[hi - 1];
}

double krawtchouk(int l, int x, const KrawtchoukContext& ctx) { return ctx(l, x); }

double krawtchouk_B(int m, int l, const KrawtchoukContext& ctx) { return ctx.B(m, l); }

std::vector<double> krawtchouk_table(const KrawtchoukContext& ctx) {
  const int n = ctx.N() + 1;
  std::vector<double> table(static_cast<std::size_t>(n) * n);
  for (int l = 0; l < n; ++l) {
    for (int x = l; x < n; ++x) {
      const double v = ctx(l, x);
      table[static_cast<std::size_t>(l) * n + x] = v;
      table[static_cast<std::size_t>(x) * n + l] = v;
    }
  }
  return table;
}

}  // namespace ehrenfest::specfun
