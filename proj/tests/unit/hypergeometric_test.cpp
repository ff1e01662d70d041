#include <gtest/gtest.h>

#include <cmath>

#include "ehrenfest/errors.hpp"
#include "ehrenfest/specfun/hypergeometric.hpp"
#include "reference.hpp"

using namespace ehrenfest;
using namespace ehrenfest::specfun;

TEST(Hyp1F1, ZeroArgumentIsOne) {
  const std::vector<double> z(5, 0.0);
  for (int H : {0, 1, 10, 30}) EXPECT_EQ(hyp1f1_matrix(0.7, 2.5, z, H).value, 1.0);
  EXPECT_EQ(hyp1f1_matrix(1.0, 3.0, std::vector<double>{}, 20).value, 1.0);
}

TEST(Hyp1F1, TruncationOrderZeroIsOne) {
  EXPECT_EQ(hyp1f1_matrix(1.0, 3.0, std::vector<double>{0.4, -0.9}, 0).value, 1.0);
}

TEST(Hyp1F1, ScalarReductionMatchesClassicalSeries) {
  for (double a : {1.0, 0.5, 2.25}) {
    for (double b : {2.0, 3.5, 7.0}) {
      for (double x : {-3.0, -0.4, 0.0, 0.8, 2.0}) {
        for (int H : {0, 3, 12, 40}) {
          const double expected = ref::scalar_hyp1f1(a, b, x, H);
          const double got = hyp1f1_matrix(a, b, std::vector<double>{x}, H).value;
          EXPECT_NEAR(got, expected, 1e-12 * std::max(1.0, std::abs(expected)))
              << "a=" << a << " b=" << b << " x=" << x << " H=" << H;
        }
      }
    }
  }
}

TEST(Hyp1F1, SimplexIntegralIdentity) {
  const std::vector<std::vector<double>> args{
      {0.7}, {-1.2, 0.4}, {0.5, 0.5}, {-2.0, -2.0, 0.0}, {0.3, -0.8, 1.1, 0.0}, {-1.0, 0.0, -1.0, 0.0}};
  for (const auto& z : args) {
    const double n = static_cast<double>(z.size());
    const double got = hyp1f1_matrix(1.0, n + 1.0, z, 60).value;
    const double expected = ref::simplex_integral(z);
    EXPECT_NEAR(got, expected, 1e-6 * expected) << "dim " << z.size();
  }
}

TEST(Hyp1F1, RepeatedEigenvaluesMatchPerturbedLimit) {
  const std::vector<double> repeated{-0.9, -0.9, -0.9, 0.0};
  const std::vector<double> perturbed{-0.9, -0.9 + 1e-7, -0.9 - 1e-7, 0.0};
  for (double b : {5.0, 2.5}) {
    const double a = hyp1f1_matrix(1.0, b, repeated, 40).value;
    const double c = hyp1f1_matrix(1.0, b, perturbed, 40).value;
    EXPECT_NEAR(a, c, 1e-6 * std::abs(a));
    const double g = hyp1f1_matrix(0.5, b, repeated, 25).value;
    const double h = hyp1f1_matrix(0.5, b, perturbed, 25).value;
    EXPECT_NEAR(g, h, 1e-6 * std::abs(g));
  }
}

TEST(Hyp1F1, KummerRelationForNonIntegerA) {
  // For a non-integer a every partition shape contributes; check against the
  // two-variable Kummer-type relation 1F1(a; b; z) = e^{tr z} 1F1(b - a; b; -z).
  const std::vector<double> z{0.4, -0.3};
  const std::vector<double> mz{-0.4, 0.3};
  const double a = 0.75, b = 3.25;
  const double lhs = hyp1f1_matrix(a, b, z, 40).value;
  const double rhs = std::exp(0.1) * hyp1f1_matrix(b - a, b, mz, 40).value;
  EXPECT_NEAR(lhs, rhs, 1e-12);
}

TEST(Hyp1F1, LastTermDecreasesGeometrically) {
  const std::vector<double> z{-1.5, -1.5, 0.0};
  double prev = hyp1f1_matrix(1.0, 4.0, z, 10).last_term;
  for (int H = 11; H <= 30; ++H) {
    const auto r = hyp1f1_matrix(1.0, 4.0, z, H);
    EXPECT_LT(r.last_term, prev);
    const double step = std::abs(r.value - hyp1f1_matrix(1.0, 4.0, z, H - 1).value);
    EXPECT_NEAR(step, r.last_term, 1e-15);
    prev = r.last_term;
  }
}

TEST(Hyp1F1, RejectsBadParameters) {
  const std::vector<double> z{0.1, 0.2};
  EXPECT_THROW(hyp1f1_matrix(1.0, 3.0, z, -1), ParameterError);
  // b = 0 makes (b)_1 vanish; b = 1 makes (b - 1)_1 vanish in the second row.
  EXPECT_THROW(hyp1f1_matrix(1.0, 0.0, z, 5), ParameterError);
  EXPECT_THROW(hyp1f1_matrix(1.0, 1.0, z, 5), ParameterError);
  EXPECT_NO_THROW(hyp1f1_matrix(1.0, 1.0, std::vector<double>{0.1}, 5));
  EXPECT_NO_THROW(hyp1f1_matrix(1.0, 0.5, z, 5));
}
