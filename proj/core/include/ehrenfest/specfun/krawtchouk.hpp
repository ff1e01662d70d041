#pragma once

#include <span>
#include <vector>

namespace ehrenfest::specfun {

/// Krawtchouk polynomials K_l(x; N, p) on x = 0..N, orthogonal with respect to
/// the Binomial(N, p) weight omega(x).
///
/// Normalization: K_l(0) = 1, and
///
///   sum_x K_l(x) K_m(x) omega(x) = delta_{lm} / pi_l,   pi_l = C(N,l) (p/q)^l.
///
/// The context is immutable once built and safe to share between threads.
class KrawtchoukContext {
 public:
  /// Throws ParameterError unless N >= 1 and 0 < p < 1.
  KrawtchoukContext(int N, double p);

  int N() const noexcept { return N_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  /// omega(x) = C(N,x) p^x q^(N-x).
  double omega(int x) const;
  std::span<const double> omegas() const noexcept { return omega_; }
  /// pi_l = C(N,l) (p/q)^l = omega(l) q^(-N).
  double pi(int l) const;

  /// K_l(x) from the finite binomial sum
  ///   K_l(x) = C(N,l)^{-1} sum_k (-1)^k C(N-x, l-k) C(x,k) (q/p)^k.
  /// Throws DomainError unless 0 <= l, x <= N.
  double operator()(int l, int x) const;

  /// K_l(x) from the terminating Gauss series 2F1(-l, -x; -N; 1/p), summed in
  /// long double. Numerically weaker than operator() for large N; kept as an
  /// independent evaluation route.
  double hypergeometric_form(int l, int x) const;

  /// B_{m,l} = sum_x x K_l(x) K_m(x) omega(x), from the three-term recurrence:
  ///   0                          if |m - l| >= 2,
  ///   -max(m,l) q / pi_{min(m,l)} if |m - l| == 1,
  ///   ((N-l) p + l q) / pi_l      if m == l.
  double B(int m, int l) const;

 private:
  void check_index(int i, const char* name) const;

  int N_;
  double p_;
  double q_;
  std::vector<double> omega_;
  std::vector<double> pi_;
};

/// K_l(x) convenience wrapper.
double krawtchouk(int l, int x, const KrawtchoukContext& ctx);
double krawtchouk_B(int m, int l, const KrawtchoukContext& ctx);

/// Row-major (N+1) x (N+1) table with entry [l * (N+1) + x] = K_l(x).
std::vector<double> krawtchouk_table(const KrawtchoukContext& ctx);

}  // namespace ehrenfest::specfun
