#include "nsmean/rational.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace nsmean {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
  return Rational(std::move(v));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int Rational::sign() const { return sgn(value_); }

double Rational::to_double() const {
  // get_d truncates toward zero; pick the nearer of it and its outward
  // neighbour, ties to even.
  const double toward = value_.get_d();
  if (sign() == 0) return 0.0;
  const double away =
      std::nextafter(toward, sign() < 0 ? -std::numeric_limits<double>::infinity()
                                        : std::numeric_limits<double>::infinity());
  if (!std::isfinite(away)) return toward;
  const mpq_class d_toward = abs(value_ - mpq_class(toward));
  const mpq_class d_away = abs(mpq_class(away) - value_);
  if (d_away < d_toward) return away;
  if (d_toward < d_away) return toward;
  return (std::bit_cast<std::uint64_t>(toward) & 1u) ? away : toward;
}

std::string Rational::str() const { return value_.get_str(10); }

Rational power_of_two(long exponent) {
  mpz_class p = 1;
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                       : static_cast<unsigned long>(exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p, mpz_class(1));
}

const mpz_class& factorial(unsigned n) {
  static const std::vector<mpz_class> table = [] {
    std::vector<mpz_class> t(1025);
    t[0] = 1;
    for (unsigned k = 1; k < t.size(); ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  if (n >= table.size()) throw std::out_of_range("factorial: n > 1024");
  return table[n];
}

}  // namespace nsmean
