#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ehrenfest/specfun/partition.hpp"

namespace ehrenfest::specfun {

/// Evaluates Schur polynomials s_m(z_1, ..., z_n) at a fixed point by the
/// branching rule
///
///   s_m(z_1..z_k) = sum over horizontal strips m/mu of s_mu(z_1..z_{k-1}) z_k^{|m|-|mu|}.
///
/// The rule is a sum of monomials with no division, so repeated (or zero)
/// coordinates need no special treatment. Intermediate values are memoized
/// per (mu, k), which makes a sweep over many partitions at one point cheap.
class SchurEvaluator {
 public:
  explicit SchurEvaluator(std::vector<double> z);

  std::size_t dimension() const noexcept { return z_.size(); }

  /// Plain Schur polynomial s_m(z). Zero when m has more parts than dim(z).
  double schur(const Partition& m);

  /// Normalized Schur function Z_m(z) = (|m|! / hook_product(m)) * s_m(z).
  double normalized(const Partition& m);

 private:
  double eval(const std::vector<int>& parts, std::size_t k);
  void strips(const std::vector<int>& parts, std::size_t row, std::vector<int>& mu, std::size_t k,
              double& acc);

  std::vector<double> z_;
  std::vector<std::vector<double>> powers_;  // powers_[k][e] = z_k^e, grown lazily
  std::map<std::pair<std::vector<int>, std::size_t>, double> memo_;
};

/// Z_m(z). Convenience wrapper around a one-shot SchurEvaluator.
double schur_normalized(const Partition& m, std::span<const double> z);

}  // namespace ehrenfest::specfun
