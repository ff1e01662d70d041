#include <gtest/gtest.h>

#include <cmath>

#include "ehrenfest/errors.hpp"
#include "ehrenfest/pricing/ehrenfest_pricer.hpp"
#include "ehrenfest/pricing/oracles.hpp"

using namespace ehrenfest;
using namespace ehrenfest::pricing;
using process::EhrenfestParams;
using shortrate::ShortRateModel;

namespace {

ShortRateModel model(int N, double lambda, double alpha, double beta, double rm = 0.01,
                     double rM = 0.09) {
  return ShortRateModel(EhrenfestParams(N, lambda, alpha, beta), rm, rM);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Truncation, DefaultsAndValidation) {
  const Truncation t;
  EXPECT_EQ(t.M, 10);
  EXPECT_EQ(t.H, 30);
  EXPECT_THROW((Truncation{-1, 3}.validate()), ParameterError);
  EXPECT_THROW((Truncation{3, -1}.validate()), ParameterError);
}

TEST(PriceGeneral, ZeroHorizonIsOne) {
  const auto m = model(4, 1.0, 0.4, 0.7);
  EXPECT_EQ(price_general(m, 2.0, 2.0, 0.03).price, 1.0);
  EXPECT_EQ(price_symmetric(model(4, 1, 1, 1), 1.0, 1.0, 0.05).price, 1.0);
}

TEST(PriceGeneral, DegenerateModelIsDeterministicDiscount) {
  const auto flat = model(5, 1.0, 0.4, 0.7, 0.03, 0.03);
  EXPECT_NEAR(price_general(flat, 0.0, 2.5, 0.03).price, std::exp(-0.075), 1e-15);
  const auto flat_sym = model(5, 1.0, 1.0, 1.0, 0.03, 0.03);
  EXPECT_NEAR(price_symmetric(flat_sym, 0.0, 2.5, 0.03).price, std::exp(-0.075), 1e-15);
}

TEST(PriceGeneral, MatchesFeynmanKacOnSmallModel) {
  // Frozen Feynman-Kac value for this configuration.
  const auto m = model(4, 1.0, 0.4, 0.7);
  const double fk = 0.9553869424648351;
  EXPECT_NEAR(price_fk_oracle(m, 0.0, 1.0, m.rate(2)), fk, 1e-14);
  const auto res = price_general(m, 0.0, 1.0, m.rate(2), {14, 40});
  EXPECT_LT(rel(res.price, fk), 1e-5);
  EXPECT_LT(rel(res.price, fk), 1e-13);
  EXPECT_EQ(res.truncation, (Truncation{14, 40}));
  EXPECT_GE(res.wall_time_s, 0.0);
}

TEST(PriceGeneral, ShiftInvariantInValuationTime) {
  const auto m = model(6, 0.5, 0.1, 0.3);
  EXPECT_DOUBLE_EQ(price_general(m, 0.0, 3.0, m.rate(1)).price,
                   price_general(m, 2.0, 5.0, m.rate(1)).price);
}

TEST(PriceGeneral, ErrorsOnBadInput) {
  const auto m = model(4, 1.0, 0.4, 0.7);
  EXPECT_THROW(price_general(m, 1.0, 0.5, 0.03), DomainError);
  EXPECT_THROW(price_general(m, 0.0, 1.0, 0.031), OffGridError);
  EXPECT_THROW(price_general(m, 0.0, 1.0, 0.03, {-1, 30}), ParameterError);
}

TEST(PriceSymmetric, AgreesWithGeneral) {
  const auto m = model(4, 0.5, 1.0, 1.0, 0.02, 0.06);
  for (int k = 0; k <= 4; ++k) {
    const double a = price_symmetric(m, 0.0, 0.5, m.rate(k)).price;
    const double b = price_general(m, 0.0, 0.5, m.rate(k)).price;
    EXPECT_LT(rel(a, b), 1e-5) << "k=" << k;
  }
}

TEST(PriceSymmetric, RequiresUnitAlphaBeta) {
  EXPECT_THROW(price_symmetric(model(4, 1, 0.4, 0.7), 0.0, 1.0, 0.05), ModelError);
  EXPECT_THROW(price_symmetric(model(4, 1, 1.0, 0.5), 0.0, 1.0, 0.05), ModelError);
}

TEST(PriceSymmetric, MatchesFeynmanKac) {
  for (int N : {1, 3, 10}) {
    const auto m = model(N, 1.0, 1.0, 1.0);
    for (double tau : {0.25, 2.0, 6.0}) {
      const double fk = price_fk_oracle(m, 0.0, tau, m.rate(N / 2));
      EXPECT_LT(rel(price_symmetric(m, 0.0, tau, m.rate(N / 2), {14, 40}).price, fk), 1e-10)
          << "N=" << N << " tau=" << tau;
    }
  }
}

TEST(Pricers, DiscountBoundsAndMonotoneInRate) {
  for (const auto& m : {model(8, 1.0, 0.4, 0.7), model(8, 0.5, 1.0, 1.0), model(8, 1.0, 0.1, 0.3)}) {
    const bool sym = m.ehrenfest().alpha() == 1.0 && m.ehrenfest().beta() == 1.0;
    for (double tau : {0.25, 1.0, 5.0}) {
      double prev = 2.0;
      for (int k = 0; k <= 8; ++k) {
        const double p = sym ? price_symmetric(m, 0, tau, m.rate(k)).price
                             : price_general(m, 0, tau, m.rate(k)).price;
        EXPECT_GT(p, 0.0);
        EXPECT_LE(p, std::exp(-0.01 * tau) + 1e-9);
        EXPECT_GE(p, std::exp(-0.09 * tau) - 1e-9);
        EXPECT_LT(p, prev);
        prev = p;
      }
    }
  }
}

TEST(Pricers, ErrorEstimateTracksTruncationChange) {
  for (const auto& m : {model(8, 1.0, 0.4, 0.7), model(16, 0.5, 0.1, 0.3)}) {
    for (double tau : {1.0, 5.0}) {
      const double r = m.rate(3);
      const auto coarse = price_general(m, 0, tau, r, {6, 15});
      const auto fine = price_general(m, 0, tau, r, {10, 25});
      EXPECT_LE(std::abs(coarse.price - fine.price), 10 * coarse.error_estimate + 1e-15);
    }
  }
  const auto s = model(8, 1.0, 1.0, 1.0);
  const auto coarse = price_symmetric(s, 0, 5.0, s.rate(3), {3, 15});
  const auto fine = price_symmetric(s, 0, 5.0, s.rate(3), {7, 25});
  EXPECT_LE(std::abs(coarse.price - fine.price), 10 * coarse.error_estimate);
}

TEST(Pricers, LowTruncationReportsLargerError) {
  const auto m = model(8, 1.0, 0.4, 0.7);
  const auto coarse = price_general(m, 0, 5.0, m.rate(2), {3, 30});
  const auto fine = price_general(m, 0, 5.0, m.rate(2), {14, 40});
  EXPECT_GT(coarse.error_estimate, fine.error_estimate);
}
