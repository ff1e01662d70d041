#include "ehrenfest/specfun/hypergeometric.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ehrenfest/errors.hpp"
#include "ehrenfest/specfun/combinatorics.hpp"
#include "ehrenfest/specfun/schur.hpp"

namespace ehrenfest::specfun {

namespace {

bool is_nonnegative_integer(double x) { return x >= 0.0 && std::floor(x) == x; }

// [a]_m / [b]_m as one running product of factor ratios.
double pochhammer_ratio(double a, double b, const Partition& m) {
  double r = 1.0;
  for (std::size_t j = 0; j < m.length(); ++j) {
    const double sa = a - static_cast<double>(j);
    const double sb = b - static_cast<double>(j);
    for (int i = 0; i < m[j]; ++i) {
      const double num = sa + i;
      if (num == 0.0) return 0.0;
      r *= num / (sb + i);
    }
  }
  return r;
}

}  // namespace

double gen_pochhammer(double a, const Partition& m) {
  double r = 1.0;
  for (std::size_t j = 0; j < m.length(); ++j) r *= pochhammer(a - static_cast<double>(j), m[j]);
  return r;
}

SeriesValue hyp1f1_matrix(double a, double b, std::span<const double> z, int H) {
  if (H < 0) throw ParameterError("hypergeometric truncation order H must be >= 0");
  const std::size_t n = z.size();
  for (std::size_t j = 1; j <= n; ++j) {
    if (is_nonnegative_integer(-b + static_cast<double>(j) - 1.0)) {
      throw ParameterError("1F1 denominator parameter b = " + std::to_string(b) +
                           " is excluded for dimension " + std::to_string(n));
    }
  }

  // For a positive integer a, [a]_m vanishes once m has more than a parts.
  std::size_t max_parts = n;
  if (a >= 1.0 && std::floor(a) == a && a < static_cast<double>(n)) {
    max_parts = static_cast<std::size_t>(a);
  }

  SchurEvaluator schur(std::vector<double>(z.begin(), z.end()));
  SeriesValue out;
  for (int j = 0; j <= H; ++j) {
    double group = 0.0;
    PartitionGenerator gen(j, max_parts);
    while (auto m = gen.next()) {
      const double coef = pochhammer_ratio(a, b, *m);
      if (coef == 0.0) continue;
      const double s = schur.schur(*m);
      if (s == 0.0) continue;
      // Z_m / |m|! = s_m / hook_product(m)
      const double term = coef * s / hook_product(*m);
      group += term;
      out.abs_sum += std::abs(term);
    }
    out.value += group;
    out.last_term = std::abs(group);
  }
  return out;
}

}  // namespace ehrenfest::specfun
