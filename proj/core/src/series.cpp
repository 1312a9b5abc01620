#include "nsmean/series.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "extended.hpp"
#include "nsmean/means.hpp"

namespace nsmean {
namespace {

// ---------------------------------------------------------------------------
// Exact Taylor coefficients of hyperbolic expressions.

using Taylor = std::function<Rational(unsigned)>;

Rational power_over_factorial(long w, unsigned k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(w), k);
  return Rational(p, factorial(k));
}

Taylor sinh_of(long w) {
  return [w](unsigned k) { return k % 2 == 1 ? power_over_factorial(w, k) : Rational(0); };
}

Taylor cosh_of(long w) {
  return [w](unsigned k) { return k % 2 == 0 ? power_over_factorial(w, k) : Rational(0); };
}

Taylor monomial(Rational c, unsigned power) {
  return [c = std::move(c), power](unsigned k) { return k == power ? c : Rational(0); };
}

Taylor scaled(Rational c, Taylor f) {
  return [c = std::move(c), f = std::move(f)](unsigned k) { return c * f(k); };
}

Taylor times_t(Taylor f) {
  return [f = std::move(f)](unsigned k) { return k == 0 ? Rational(0) : f(k - 1); };
}

Taylor sum(std::vector<Taylor> terms) {
  return [terms = std::move(terms)](unsigned k) {
    Rational s;
    for (const auto& term : terms) s += term(k);
    return s;
  };
}

Taylor product(Taylor f, Taylor g) {
  return [f = std::move(f), g = std::move(g)](unsigned k) {
    Rational s;
    for (unsigned i = 0; i <= k; ++i) s += f(i) * g(k - i);
    return s;
  };
}

Taylor three_minus_cosh_2t() { return sum({monomial(3, 0), scaled(-1, cosh_of(2))}); }

Taylor sinh_squared() { return product(sinh_of(1), sinh_of(1)); }

Taylor expansion(CoefficientSequence seq) {
  switch (seq) {
    case CoefficientSequence::PhiNumerator:
    case CoefficientSequence::GNumerator:
      // [3 - cosh 2t][sinh 2t - 2t]
      return product(three_minus_cosh_2t(), sum({sinh_of(2), monomial(-2, 1)}));
    case CoefficientSequence::PhiDenominator:
      // (t/2)[8 cosh 2t + cosh 4t - 9]
      return times_t(sum({scaled(4, cosh_of(2)), scaled(Rational(1, 2), cosh_of(4)),
                          monomial(Rational(-9, 2), 0)}));
    case CoefficientSequence::GDenominator:
      return times_t(scaled(8, sinh_squared()));
    case CoefficientSequence::HNumerator:
      // [3 - cosh 2t][sinh 2t + t cosh 2t - 3t]
      return product(three_minus_cosh_2t(),
                     sum({sinh_of(2), times_t(cosh_of(2)), monomial(-3, 1)}));
    case CoefficientSequence::HDenominator:
      return times_t(scaled(16, sinh_squared()));
  }
  throw std::logic_error("expansion: unknown sequence");
}

// ---------------------------------------------------------------------------
// Double-precision coefficient tables for series evaluation.

const std::vector<double>& coefficient_table(CoefficientSequence seq) {
  static const std::array<std::vector<double>, 6> tables = [] {
    std::array<std::vector<double>, 6> t;
    for (std::size_t s = 0; s < t.size(); ++s) {
      t[s].reserve(kMaxSeriesTerms + 1);
      for (unsigned n = 0; n <= kMaxSeriesTerms; ++n) {
        t[s].push_back(coeff(static_cast<CoefficientSequence>(s), n).to_double());
      }
    }
    return t;
  }();
  return tables[static_cast<std::size_t>(seq)];
}

struct PolySum {
  double value;
  double tail;
};

PolySum even_series(const std::vector<double>& c, double z, unsigned terms) {
  double acc = 0.0;
  for (unsigned n = terms; n-- > 0;) acc = acc * z + c[n];
  const double last = std::fabs(c[terms - 1]) * std::pow(z, terms - 1);
  const double next = std::fabs(c[terms]) * std::pow(z, terms);
  double tail = next;
  if (last > 0.0) {
    const double ratio = next / last;
    tail = ratio < 1.0 ? next / (1.0 - ratio) : std::numeric_limits<double>::infinity();
  }
  return {acc, tail};
}

void check_terms(unsigned terms) {
  if (terms == 0 || terms > kMaxSeriesTerms) {
    throw std::invalid_argument("series: term count must be in [1, " +
                                std::to_string(kMaxSeriesTerms) + "]");
  }
}

void check_open_closed(double t, const char* what) {
  if (!(t > 0.0 && t <= kTStar)) {
    throw std::domain_error(std::string(what) + ": t must lie in (0, t*], got " + std::to_string(t));
  }
}

double direct_quotient(SequencePair pair, double t) {
  const double s = std::sinh(t);
  const double c2 = std::cosh(2 * t);
  const double s2 = std::sinh(2 * t);
  switch (pair) {
    case SequencePair::Phi:
      return (3 - c2) * (s2 - 2 * t) / (2 * t * s * s * (5 + c2));
    case SequencePair::GRatio:
      return (3 - c2) * (s2 - 2 * t) / (8 * t * s * s);
    case SequencePair::HRatio:
      return (3 - c2) * (s2 + t * c2 - 3 * t) / (16 * t * s * s);
  }
  throw std::logic_error("direct_quotient: unknown pair");
}

// sinh(t)/t - 1 without cancellation for small t.
double sinhc_minus_one(double t) {
  if (t >= 0.5) return std::sinh(t) / t - 1.0;
  const double z = t * t;
  double term = z / 6.0;
  double s = 0.0;
  for (unsigned k = 1; k < 30 && term > 1e-18 * s; ++k) {
    s += term;
    term *= z / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  return s;
}

}  // namespace

CoefficientSequence numerator_sequence(SequencePair pair) {
  switch (pair) {
    case SequencePair::Phi:
      return CoefficientSequence::PhiNumerator;
    case SequencePair::GRatio:
      return CoefficientSequence::GNumerator;
    case SequencePair::HRatio:
      return CoefficientSequence::HNumerator;
  }
  throw std::logic_error("numerator_sequence: unknown pair");
}

CoefficientSequence denominator_sequence(SequencePair pair) {
  switch (pair) {
    case SequencePair::Phi:
      return CoefficientSequence::PhiDenominator;
    case SequencePair::GRatio:
      return CoefficientSequence::GDenominator;
    case SequencePair::HRatio:
      return CoefficientSequence::HDenominator;
  }
  throw std::logic_error("denominator_sequence: unknown pair");
}

std::string_view name(CoefficientSequence seq) {
  constexpr std::array<std::string_view, 6> names = {
      "phi-numerator", "phi-denominator", "g-numerator",
      "g-denominator", "h-numerator",     "h-denominator"};
  return names[static_cast<std::size_t>(seq)];
}

std::string_view name(SequencePair pair) {
  constexpr std::array<std::string_view, 3> names = {"phi", "g-ratio", "h-ratio"};
  return names[static_cast<std::size_t>(pair)];
}

std::string_view name(Monotonicity m) {
  constexpr std::array<std::string_view, 4> names = {
      "increasing", "decreasing", "decreasing-then-increasing", "increasing-then-decreasing"};
  return names[static_cast<std::size_t>(m)];
}

Rational coeff(CoefficientSequence seq, unsigned n) {
  const long m = static_cast<long>(n);
  switch (seq) {
    case CoefficientSequence::PhiNumerator:
    case CoefficientSequence::GNumerator:
      return power_of_two(2 * m + 4) * (Rational(m + 3) - power_of_two(2 * m + 1)) /
             Rational(factorial(2 * n + 3), 1);
    case CoefficientSequence::PhiDenominator:
      return power_of_two(2 * m + 4) * (Rational(1) + power_of_two(2 * m - 1)) /
             Rational(factorial(2 * n + 2), 1);
    case CoefficientSequence::GDenominator:
      return power_of_two(2 * m + 4) / Rational(factorial(2 * n + 2), 1);
    case CoefficientSequence::HNumerator:
      return power_of_two(2 * m + 3) *
             ((Rational(3) - power_of_two(2 * m)) * Rational(2 * m + 3) + Rational(3) -
              power_of_two(2 * m + 2)) /
             Rational(factorial(2 * n + 3), 1);
    case CoefficientSequence::HDenominator:
      return power_of_two(2 * m + 5) / Rational(factorial(2 * n + 2), 1);
  }
  throw std::logic_error("coeff: unknown sequence");
}

Rational coeff_from_expansion(CoefficientSequence seq, unsigned n) {
  return expansion(seq)(2 * n + 3);
}

Rational ratio_term(SequencePair pair, unsigned n) {
  const Rational den = coeff(denominator_sequence(pair), n);
  if (den.is_zero()) throw std::domain_error("ratio_term: zero denominator coefficient");
  return coeff(numerator_sequence(pair), n) / den;
}

Rational phi_ratio_closed_form(unsigned n) {
  const long m = static_cast<long>(n);
  return (Rational(m + 3) - power_of_two(2 * m + 1)) /
         (Rational(2 * m + 3) * (Rational(1) + power_of_two(2 * m - 1)));
}

Rational difference_closed_form(SequencePair pair, unsigned n) {
  const long m = static_cast<long>(n);
  const Rational q = Rational(2 * m + 3) * Rational(2 * m + 5);
  switch (pair) {
    case SequencePair::Phi: {
      const Rational num = power_of_two(4 * m + 3) -
                           Rational(6 * m * m + 57 * m + 76) * power_of_two(2 * m - 1) -
                           Rational(3);
      return num / (q * (Rational(1) + power_of_two(2 * m - 1)) *
                    (Rational(1) + power_of_two(2 * m + 1)));
    }
    case SequencePair::GRatio:
      return -(Rational(3) + Rational(6 * m + 7) * power_of_two(2 * m + 1)) / q;
    case SequencePair::HRatio:
      return -Rational(3) * power_of_two(2 * m - 2) - Rational(3) / (Rational(2) * q) -
             Rational(6 * m + 7) * power_of_two(2 * m) / q;
  }
  throw std::logic_error("difference_closed_form: unknown pair");
}

DifferenceSign difference_sign(SequencePair pair, unsigned n) {
  Rational direct = ratio_term(pair, n + 1) - ratio_term(pair, n);
  Rational closed = difference_closed_form(pair, n);
  if (direct != closed) {
    throw FormulaMismatch("difference_sign(" + std::string(name(pair)) + ", " +
                          std::to_string(n) + "): direct " + direct.str() +
                          " != closed form " + closed.str());
  }
  const int s = direct.sign();
  return {s, std::move(direct), std::move(closed)};
}

MonotonicityPattern classify_ratio_sequence(SequencePair pair, unsigned horizon) {
  if (horizon < 4) throw std::invalid_argument("classify_ratio_sequence: horizon must be >= 4");

  std::vector<Rational> terms;
  terms.reserve(horizon + 1);
  for (unsigned n = 0; n <= horizon; ++n) terms.push_back(ratio_term(pair, n));

  const int first = (terms[1] - terms[0]).sign();
  std::optional<unsigned> switch_index;
  for (unsigned n = 0; n < horizon; ++n) {
    const int s = (terms[n + 1] - terms[n]).sign();
    if (s == 0) {
      throw InconclusivePattern("classify_ratio_sequence: equal consecutive terms at n = " +
                                std::to_string(n));
    }
    const int expected = switch_index ? -first : first;
    if (s != expected) {
      if (switch_index) {
        throw InconclusivePattern("classify_ratio_sequence: second direction change at n = " +
                                  std::to_string(n));
      }
      switch_index = n;
    }
  }

  Monotonicity kind;
  if (!switch_index) {
    kind = first < 0 ? Monotonicity::Decreasing : Monotonicity::Increasing;
  } else {
    kind = first < 0 ? Monotonicity::DecreasingThenIncreasing
                     : Monotonicity::IncreasingThenDecreasing;
  }
  return {kind, switch_index, horizon};
}

SeriesEvaluation series_quotient(SequencePair pair, double t, unsigned terms) {
  check_terms(terms);
  if (!(t >= 0.0 && t <= kTStar)) {
    throw std::domain_error("series_quotient: t must lie in [0, t*], got " + std::to_string(t));
  }
  const double z = t * t;
  const PolySum num = even_series(coefficient_table(numerator_sequence(pair)), z, terms);
  const PolySum den = even_series(coefficient_table(denominator_sequence(pair)), z, terms);
  const double q = num.value / den.value;
  return {q, (num.tail + std::fabs(q) * den.tail) / std::fabs(den.value)};
}

double derivative_quotient(SequencePair pair, double t, EvalMethod method, unsigned terms) {
  if (method == EvalMethod::Series) return series_quotient(pair, t, terms).value;
  check_open_closed(t, "derivative_quotient");
  return direct_quotient(pair, t);
}

double phi_eval(double t, EvalMethod method, unsigned terms) {
  return derivative_quotient(SequencePair::Phi, t, method, terms);
}

double phi(double t) {
  return t < 0.05 ? phi_eval(t, EvalMethod::Series) : phi_eval(t, EvalMethod::Direct);
}

double phi_derivative(double t) {
  check_open_closed(t, "phi_derivative");
  if (t < 0.05) {
    const auto& a = coefficient_table(CoefficientSequence::PhiNumerator);
    const auto& b = coefficient_table(CoefficientSequence::PhiDenominator);
    const double z = t * t;
    double num = 0, den = 0, dnum = 0, dden = 0;
    for (unsigned n = kDefaultSeriesTerms; n-- > 0;) {
      num = num * z + a[n];
      den = den * z + b[n];
      if (n > 0) {
        dnum = dnum * z + n * a[n];
        dden = dden * z + n * b[n];
      }
    }
    // d/dt of sum c_n t^2n = 2t sum n c_n t^(2n-2)
    dnum *= 2 * t;
    dden *= 2 * t;
    return (dnum * den - num * dden) / (den * den);
  }
  const double s = std::sinh(t);
  const double c = std::cosh(t);
  const double c2 = std::cosh(2 * t);
  const double p1 = (3 - c2) * (std::sinh(2 * t) - 2 * t);
  const double p2 = 2 * t * s * s * (5 + c2);
  const double dp1 = 8 * s * (t * c - 2 * s * s * s);
  const double dp2 = s * (20 * t * c + 4 * t * std::cosh(3 * t) + 9 * s + std::sinh(3 * t));
  return (dp1 * p2 - p1 * dp2) / (p2 * p2);
}

double phi_derivative_fd(double t) {
  check_open_closed(t, "phi_derivative_fd");
  using detail::Extended;
  const Extended h = Extended(std::max(t, 0.01)) * Extended("1e-6");
  const Extended x(t);
  const Extended d = (detail::phi_direct(x + h) - detail::phi_direct(x - h)) / (2 * h);
  return static_cast<double>(d);
}

double phi_derivative_at_tstar_closed_form() {
  return -(std::numbers::sqrt2 - kTStar) / (std::numbers::sqrt2 * kTStar);
}

std::array<HyperbolicCheckpoint, 3> hyperbolic_checkpoints() {
  using detail::Extended;
  const Extended root2 = sqrt(Extended(2));
  const Extended tstar = log(1 + root2);
  const std::array<Extended, 3> sinh_expected = {Extended(1), 2 * root2, Extended(7)};
  const std::array<Extended, 3> cosh_expected = {root2, Extended(3), 5 * root2};
  std::array<HyperbolicCheckpoint, 3> out{};
  for (int k = 1; k <= 3; ++k) {
    const Extended kt = k * tstar;
    const auto i = static_cast<std::size_t>(k - 1);
    out[i] = {k, static_cast<double>(sinh(kt)), static_cast<double>(cosh(kt)),
              static_cast<double>(sinh_expected[i]), static_cast<double>(cosh_expected[i])};
  }
  return out;
}

RatioParts ratio_function_parts(SequencePair pair, double t) {
  if (!(t >= 0.0 && t < kTStar)) {
    throw std::domain_error("ratio_function_parts: t must lie in [0, t*), got " +
                            std::to_string(t));
  }
  const double sh = std::sinh(t);
  const double half = std::sinh(0.5 * t);
  const double log_cosh = std::log1p(2.0 * half * half);
  const double log_sinhc = std::log1p(sinhc_minus_one(t));
  const double log_one_minus_sinh2 = std::log1p(-sh * sh);
  switch (pair) {
    case SequencePair::Phi:
      return {log_cosh - log_sinhc, log_cosh - log_one_minus_sinh2};
    case SequencePair::GRatio:
      return {log_cosh - log_sinhc, log_cosh - 0.5 * log_one_minus_sinh2};
    case SequencePair::HRatio:
      return {log_cosh - 0.5 * log_sinhc, log_cosh - 0.5 * log_one_minus_sinh2};
  }
  throw std::logic_error("ratio_function_parts: unknown pair");
}

double ratio_function(SequencePair pair, double t) {
  if (!(t > 0.0)) throw std::domain_error("ratio_function: t must be > 0");
  const RatioParts p = ratio_function_parts(pair, t);
  return p.numerator / p.denominator;
}

}  // namespace nsmean
