#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "nsmean/rational.hpp"

using nsmean::Rational;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(4, 6).str(), "2/3");
  EXPECT_EQ(Rational(3, -9).str(), "-1/3");
  EXPECT_EQ(Rational(10, 5).str(), "2");
  EXPECT_EQ(Rational(0, 7).str(), "0");
  EXPECT_EQ(Rational::parse("-122/297"), Rational(-122, 297));
  EXPECT_EQ(Rational::parse("12/8"), Rational(3, 2));
}

TEST(Rational, Arithmetic) {
  const Rational a(2, 9);
  const Rational b(-4, 15);
  EXPECT_EQ(a + b, Rational(-2, 45));
  EXPECT_EQ(a - b, Rational(22, 45));
  EXPECT_EQ(a * b, Rational(-8, 135));
  EXPECT_EQ(a / b, Rational(-5, 6));
  EXPECT_EQ(-a, Rational(-2, 9));
  EXPECT_LT(b, a);
  EXPECT_EQ(b.sign(), -1);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Rational, Errors) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

TEST(Rational, ToDoubleRoundsToNearest) {
  EXPECT_EQ(Rational(2, 9).to_double(), 2.0 / 9.0);
  EXPECT_EQ(Rational(-4, 15).to_double(), -4.0 / 15.0);
  EXPECT_EQ(Rational(1, 3).to_double(), 1.0 / 3.0);
  EXPECT_EQ(Rational(5, 12).to_double(), 5.0 / 12.0);
  EXPECT_EQ(Rational(5, 9).to_double(), 5.0 / 9.0);
  // IEEE division is correctly rounded, so it is the reference.
  gen::Source src(3);
  for (int i = 0; i < 5000; ++i) {
    const long p = static_cast<long>(src.uniform(-1e9, 1e9));
    const long q = static_cast<long>(src.uniform(1, 1e9));
    EXPECT_EQ(Rational(p, q).to_double(), static_cast<double>(p) / static_cast<double>(q))
        << p << "/" << q;
  }
}

TEST(Rational, PowersAndFactorials) {
  EXPECT_EQ(nsmean::power_of_two(10), Rational(1024));
  EXPECT_EQ(nsmean::power_of_two(-3), Rational(1, 8));
  EXPECT_EQ(nsmean::factorial(0), 1);
  EXPECT_EQ(nsmean::factorial(10), 3628800);
  EXPECT_EQ(nsmean::factorial(25).get_str(), "15511210043330985984000000");
  EXPECT_THROW(nsmean::factorial(1025), std::out_of_range);
}
