#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "nsmean/log_mean.hpp"
#include "oracle.hpp"

using namespace nsmean;

TEST(LogMean, SpecialOrders) {
  const PositivePair p(2, 1);
  EXPECT_DOUBLE_EQ(generalized_log_mean(1.0, p), 1.5);
  EXPECT_DOUBLE_EQ(generalized_log_mean(-1.0, p), 1.0 / std::numbers::ln2);
  EXPECT_DOUBLE_EQ(generalized_log_mean(0.0, p), 4.0 / std::numbers::e);
  EXPECT_DOUBLE_EQ(generalized_log_mean(2.0, p), std::sqrt(7.0 / 3.0));
  EXPECT_DOUBLE_EQ(generalized_log_mean(solve_p0().root, p), 1.5233025644641615);
  EXPECT_EQ(generalized_log_mean(3.7, PositivePair(4, 4)), 4.0);
}

TEST(LogMean, AgainstOracle) {
  gen::Source src(31);
  for (int i = 0; i < 1000; ++i) {
    const auto [a, b] = src.pair(1e-2, 1e2);
    const double p = src.uniform(-4.0, 4.0);
    const double got = generalized_log_mean(p, PositivePair(a, b));
    EXPECT_LE(oracle::rel(got, oracle::log_mean_p(oracle::Big(p), a, b)), 1e-12)
        << "p=" << p << " a=" << a << " b=" << b;
  }
}

TEST(LogMean, NearDiagonalAgainstOracle) {
  gen::Source src(32);
  for (int i = 0; i < 300; ++i) {
    const double a = src.log_uniform(1e-2, 1e2);
    const double b = a * (1 + src.log_uniform(1e-12, 1e-3));
    for (double p : {-3.0, -1.0, 0.0, 0.5, 2.0, solve_p0().root}) {
      const double got = generalized_log_mean(p, PositivePair(a, b));
      EXPECT_LE(oracle::rel(got, oracle::log_mean_p(oracle::Big(p), a, b)), 1e-14)
          << "p=" << p << " a=" << a << " b=" << b;
    }
  }
}

TEST(LogMean, ContinuousAtSpecialOrders) {
  // d log L_p / dp is half a variance of log t over [a, b], so a shift of
  // 1e-7 in p moves L_p by up to 1e-7 * log(a/b)^2 / 8. The flat 1e-9 bound
  // therefore only holds for ratios up to about 1.5; wider pairs get the
  // slope bound.
  gen::Source src(33);
  for (int i = 0; i < 400; ++i) {
    const bool close = i % 2 == 0;
    const double a = src.log_uniform(1e-2, 1e2);
    const double b = close ? a * src.log_uniform(1 / 1.5, 1.5) : src.log_uniform(1e-2, 1e2);
    if (a == b) continue;
    const PositivePair pair(a, b);
    const double spread = std::log(a / b);
    for (double centre : {0.0, -1.0}) {
      const double at = generalized_log_mean(centre, pair);
      for (double d : {1e-7, -1e-7}) {
        const double jump = std::fabs(generalized_log_mean(centre + d, pair) / at - 1.0);
        const double bound = close ? 1e-9 : 1.01e-7 * spread * spread / 8 + 1e-12;
        EXPECT_LE(jump, bound) << "p=" << centre + d << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(LogMean, NearSpecialOrdersAgainstOracle) {
  gen::Source src(35);
  for (int i = 0; i < 200; ++i) {
    const auto [a, b] = src.pair(1e-2, 1e2);
    for (double p : {1e-7, -1e-7, 1e-6, -1e-6, 1e-9, -1.0 + 1e-7, -1.0 - 1e-7, -1.0 + 1e-6}) {
      const double got = generalized_log_mean(p, PositivePair(a, b));
      EXPECT_LE(oracle::rel(got, oracle::log_mean_p(oracle::Big(p), a, b)), 1e-12)
          << "p=" << p << " a=" << a << " b=" << b;
    }
  }
}

TEST(LogMean, IncreasingInOrder) {
  gen::Source src(34);
  for (int i = 0; i < 100; ++i) {
    const auto [a, b] = src.pair(1e-2, 1e2);
    if (std::fabs(a / b - 1) < 1e-3) continue;
    const PositivePair pair(a, b);
    double prev = generalized_log_mean(-5.0, pair);
    for (int k = 1; k <= 1000; ++k) {
      const double p = -5.0 + 10.0 * k / 1000;
      const double v = generalized_log_mean(p, pair);
      ASSERT_GT(v, prev) << "p=" << p << " a=" << a << " b=" << b;
      prev = v;
    }
  }
}

TEST(LogMean, P0) {
  const RootResult r = solve_p0();
  EXPECT_NEAR(r.root, 1.8435205184311404729, 1e-15);
  EXPECT_EQ(std::floor(r.root * 1000), 1843.0);  // "1.843..."
  EXPECT_LE(std::fabs(r.residual), 1e-12);
  EXPECT_NEAR(p0_equation(1.8), 0.00908, 1e-5);
  EXPECT_NEAR(p0_equation(1.9), -0.01142, 1e-5);
  EXPECT_GT(p0_equation(1.8) * -p0_equation(1.9), 0.0);
}
