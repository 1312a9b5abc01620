#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nsmean {

/// Exact rational number in lowest terms with a positive denominator.
/// Arithmetic never rounds; division by zero throws std::domain_error.
class Rational {
 public:
  Rational() = default;
  Rational(long numerator, long denominator = 1);
  explicit Rational(mpq_class value);
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  /// "p/q" or "p".
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// -1, 0 or +1.
  int sign() const;
  bool is_zero() const { return sign() == 0; }
  /// Correctly rounded (to nearest, ties to even).
  double to_double() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

 private:
  mpq_class value_;
};

/// 2^exponent, exact for negative exponents too.
Rational power_of_two(long exponent);

/// n!, exact. Values up to 1024! are tabulated once per process.
const mpz_class& factorial(unsigned n);

}  // namespace nsmean
