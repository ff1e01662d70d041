#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ehrenfest/process/random.hpp"

namespace ehrenfest::process {

/// Parameters of the continuous-time Ehrenfest process on {0..N}: N balls,
/// each carrying a Poisson clock of intensity lambda; at a ring a ball in
/// urn II moves to urn I with probability alpha, a ball in urn I moves back
/// with probability beta. The state counts balls in urn I.
class EhrenfestParams {
 public:
  /// Throws ParameterError unless N >= 1, lambda > 0 and alpha, beta in (0,1].
  EhrenfestParams(int N, double lambda, double alpha, double beta);

  int N() const noexcept { return N_; }
  double lambda() const noexcept { return lambda_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// Stationary probability of a single ball being in urn I.
  double p() const noexcept { return alpha_ / (alpha_ + beta_); }
  double q() const noexcept { return 1.0 - p(); }
  /// Relaxation rate lambda (alpha + beta).
  double speed() const noexcept { return lambda_ * (alpha_ + beta_); }

  friend bool operator==(const EhrenfestParams&, const EhrenfestParams&) = default;

 private:
  int N_;
  double lambda_;
  double alpha_;
  double beta_;
};

/// Birth-and-death form of the chain: birth[i] = lambda alpha (N - i),
/// death[i] = lambda beta i (that is gamma alpha (N-i)/N and gamma beta i/N
/// with gamma = lambda N).
struct BirthDeathRates {
  std::vector<double> birth;
  std::vector<double> death;
};

BirthDeathRates birth_death_rates(const EhrenfestParams& params);

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Transition matrix P(t) of one ball (state 0 = urn II, 1 = urn I).
/// Throws DomainError for t < 0.
Matrix2 binary_semigroup(double t, const EhrenfestParams& params);

/// p_ij(t) = pi_j sum_x omega(x) K_i(x) K_j(x) exp(-lambda (alpha+beta) x t).
double transition_prob(int i, int j, double t, const EhrenfestParams& params);

/// Full (N+1) x (N+1) transition matrix, row-major.
std::vector<double> transition_matrix(double t, const EhrenfestParams& params);

/// E[X_t | X_0 = i] = Np - (Np - i) e^{-speed t}.
double conditional_mean(int i, double t, const EhrenfestParams& params);

/// Var[X_t | X_0 = i] = (1 - e)(Npq + e (i q^2 + (N - i) p^2)), e = e^{-speed t}.
double conditional_variance(int i, double t, const EhrenfestParams& params);

/// Binomial(N, p) pmf over {0..N}.
std::vector<double> stationary_pmf(const EhrenfestParams& params);

/// A realized path: piecewise constant, states[k] held on [times[k], times[k+1]).
/// times[0] = 0 holds the initial state; later entries are jump epochs.
struct PathSample {
  std::vector<double> times;
  std::vector<int> states;
  double horizon = 0.0;
};

struct Jump {
  double wait;
  int next;
};

/// One exact step from `state`: Exp(birth + death) holding time, then up with
/// probability birth / (birth + death).
Jump next_jump(int state, const EhrenfestParams& params, Rng& rng);

/// Event-driven exact simulation on [0, horizon]. Deterministic in seed.
/// Throws DomainError unless 0 <= i0 <= N and horizon > 0.
PathSample simulate_path(int i0, double horizon, const EhrenfestParams& params, std::uint64_t seed);

/// Same, drawing from a caller-owned generator.
PathSample simulate_path(int i0, double horizon, const EhrenfestParams& params, Rng& rng);

/// State held at time t along the path.
int state_at(const PathSample& path, double t);

}  // namespace ehrenfest::process
