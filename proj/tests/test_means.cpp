#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "generators.hpp"
#include "nsmean/means.hpp"
#include "oracle.hpp"

using namespace nsmean;
using oracle::Mean;

namespace {

constexpr std::array<Mean, 9> kOracleOrder = {Mean::H, Mean::G, Mean::L, Mean::P, Mean::A,
                                              Mean::M, Mean::T, Mean::Q, Mean::C};

Mean oracle_kind(MeanKind k) { return kOracleOrder[static_cast<std::size_t>(k)]; }

}  // namespace

TEST(Means, ValuesAtTwoOne) {
  const PositivePair p(2, 1);
  // 60-digit reference values, rounded.
  EXPECT_DOUBLE_EQ(mean_eval(MeanKind::Harmonic, p), 1.3333333333333333);
  EXPECT_DOUBLE_EQ(mean_eval(MeanKind::Geometric, p), 1.414213562373095);
  EXPECT_DOUBLE_EQ(mean_eval(MeanKind::Logarithmic, p), 1.4426950408889634);
  EXPECT_DOUBLE_EQ(mean_eval(MeanKind::SeiffertFirst, p), 1.4712939827611636);
  EXPECT_DOUBLE_EQ(mean_eval(MeanKind::Arithmetic, p), 1.5);
  EXPECT_DOUBLE_EQ(mean_eval(MeanKind::NeumanSandor, p), 1.5269499789134872);
  EXPECT_DOUBLE_EQ(mean_eval(MeanKind::SeiffertSecond, p), 1.5539988763581693);
  EXPECT_DOUBLE_EQ(mean_eval(MeanKind::Quadratic, p), 1.5811388300841897);
  EXPECT_DOUBLE_EQ(mean_eval(MeanKind::ContraHarmonic, p), 1.6666666666666667);
  EXPECT_DOUBLE_EQ(neuman_sandor(PositivePair(3, 1)), 2.0780869212350275);
}

TEST(Means, DiagonalReturnsArgument) {
  for (MeanKind k : kChainOrder) {
    EXPECT_EQ(mean_eval(k, PositivePair(5, 5)), 5.0) << symbol(k);
    EXPECT_EQ(mean_eval(k, PositivePair(0.1, 0.1)), 0.1) << symbol(k);
  }
}

TEST(Means, RejectsInvalidPairs) {
  EXPECT_THROW(PositivePair(0, 1), std::domain_error);
  EXPECT_THROW(PositivePair(-1, 1), std::domain_error);
  EXPECT_THROW(PositivePair(1, std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  EXPECT_THROW(PositivePair(std::numeric_limits<double>::infinity(), 1), std::domain_error);
  EXPECT_THROW(ScaledVariable::from_x(1.0), std::domain_error);
  EXPECT_THROW(ScaledVariable::from_x(-0.1), std::domain_error);
  EXPECT_THROW(ScaledVariable::from_complement(0.0), std::domain_error);
}

TEST(Means, ParseKind) {
  EXPECT_EQ(parse_mean_kind("M"), MeanKind::NeumanSandor);
  EXPECT_EQ(parse_mean_kind("neuman-sandor"), MeanKind::NeumanSandor);
  EXPECT_EQ(parse_mean_kind("contra-harmonic"), MeanKind::ContraHarmonic);
  EXPECT_FALSE(parse_mean_kind("m").has_value());
  EXPECT_FALSE(parse_mean_kind("").has_value());
  for (MeanKind k : kChainOrder) {
    EXPECT_EQ(parse_mean_kind(symbol(k)), k);
    EXPECT_EQ(parse_mean_kind(name(k)), k);
  }
}

TEST(Means, NearDiagonalStability) {
  const PositivePair p(1 + 1e-10, 1);
  const double m = neuman_sandor(p);
  ASSERT_TRUE(std::isfinite(m));
  EXPECT_LE(std::fabs(m / p.arithmetic() - 1.0), 1e-10);
  EXPECT_LE(oracle::rel(m, oracle::mean(Mean::M, 1 + 1e-10, 1.0)), 2e-16);
}

TEST(Means, AsinhSmallArgument) {
  EXPECT_EQ(asinh_stable(1e-8), 9.999999999999999833333333e-9);
  EXPECT_EQ(asinh_stable(0.0), 0.0);
  EXPECT_EQ(asinh_stable(-1e-8), -asinh_stable(1e-8));
  EXPECT_EQ(asinh_stable(1e-300), 1e-300);
}

TEST(Means, AsinhAgainstOracle) {
  gen::Source src(7);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::copysign(src.log_uniform(1e-12, 1e12), src.unit() - 0.5);
    EXPECT_LE(oracle::rel(asinh_stable(x), oracle::asinh(oracle::big(x))), 4e-16) << x;
  }
}

TEST(Means, SeriesCutoverIsContinuous) {
  // Both branches of every transcendental quotient at the switch point.
  for (MeanKind k : {MeanKind::Logarithmic, MeanKind::SeiffertFirst, MeanKind::NeumanSandor,
                     MeanKind::SeiffertSecond}) {
    const double below = scaled_ratio(k, std::nextafter(kSeriesCutoff, 0.0));
    const double at = scaled_ratio(k, kSeriesCutoff);
    EXPECT_LE(std::fabs(below / at - 1.0), 1e-13) << symbol(k);
  }
  // Same through mean_eval on pairs straddling |x| = 2^-10.
  const PositivePair lo(1.0, (1 - 0x1.fffffp-11) / (1 + 0x1.fffffp-11));
  const PositivePair hi(1.0, (1 - 0x1.00001p-10) / (1 + 0x1.00001p-10));
  ASSERT_LT(lo.x(), kSeriesCutoff);
  ASSERT_GT(hi.x(), kSeriesCutoff);
  const double m_lo = neuman_sandor(lo) / lo.arithmetic();
  const double m_hi = neuman_sandor(hi) / hi.arithmetic();
  // True slope of M/A is -x/3: across this gap that is ~2e-12.
  EXPECT_LE(std::fabs(m_lo / m_hi - 1.0), 3e-12);
}

TEST(Means, AgreeWithOracleOnRandomPairs) {
  gen::Source src(11);
  for (int i = 0; i < 3000; ++i) {
    const auto [a, b] = src.pair(1e-3, 1e3);
    const PositivePair p(a, b);
    for (MeanKind k : kChainOrder) {
      EXPECT_LE(oracle::rel(mean_eval(k, p), oracle::mean(oracle_kind(k), a, b)), 1e-14)
          << symbol(k) << " a=" << a << " b=" << b;
    }
  }
}

TEST(Means, AgreeWithOracleNearDiagonal) {
  gen::Source src(12);
  for (int i = 0; i < 500; ++i) {
    const double a = src.log_uniform(1e-3, 1e3);
    const double b = a * (1 + src.log_uniform(1e-14, 1e-3));
    for (MeanKind k : kChainOrder) {
      EXPECT_LE(oracle::rel(mean_eval(k, PositivePair(a, b)), oracle::mean(oracle_kind(k), a, b)),
                1e-14)
          << symbol(k) << " a=" << a << " b=" << b;
    }
  }
}

TEST(Means, ScaledLogAgainstOracle) {
  gen::Source src(13);
  for (int i = 0; i < 1000; ++i) {
    const double x = src.scaled_x(1e-8);
    const oracle::Big bx(x);
    const oracle::Big b = oracle::partner(bx);
    const oracle::Big la = log(oracle::mean(Mean::A, oracle::Big(1), b));
    for (MeanKind k : kChainOrder) {
      if (k == MeanKind::Arithmetic) continue;
      const oracle::Big want = log(oracle::mean(oracle_kind(k), oracle::Big(1), b)) - la;
      EXPECT_LE(oracle::rel(scaled_log(k, ScaledVariable::from_x(x)), want), 1e-13)
          << symbol(k) << " x=" << x;
    }
  }
}

TEST(Means, ComplementCarriedExactly) {
  // b/a = 1e-200: 1 - x is far below machine epsilon.
  const PositivePair p(1.0, 1e-200);
  const ScaledVariable v = ScaledVariable::from_pair(p);
  EXPECT_EQ(v.x(), 1.0);
  EXPECT_DOUBLE_EQ(v.complement(), 2e-200);
  EXPECT_TRUE(std::isfinite(scaled_log(MeanKind::Harmonic, v)));
  EXPECT_NEAR(scaled_log(MeanKind::Harmonic, v), std::log(2e-200) + std::log(2.0), 1e-12);
}

TEST(Means, SymmetricAndHomogeneous) {
  gen::Source src(14);
  for (int i = 0; i < 1000; ++i) {
    const auto [a, b] = src.pair(1e-2, 1e2);
    const double lambda = src.log_uniform(1e-3, 1e3);
    for (MeanKind k : kChainOrder) {
      const double m = mean_eval(k, PositivePair(a, b));
      EXPECT_LE(std::fabs(mean_eval(k, PositivePair(b, a)) / m - 1), 4e-16) << symbol(k);
      EXPECT_LE(std::fabs(mean_eval(k, PositivePair(lambda * a, lambda * b)) / (lambda * m) - 1),
                2e-15)
          << symbol(k);
    }
  }
}
