#include "nsmean/means.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nsmean {
namespace {

struct KindNames {
  MeanKind kind;
  std::string_view symbol;
  std::string_view name;
};

constexpr std::array<KindNames, 9> kNames = {{
    {MeanKind::Harmonic, "H", "harmonic"},
    {MeanKind::Geometric, "G", "geometric"},
    {MeanKind::Logarithmic, "L", "logarithmic"},
    {MeanKind::SeiffertFirst, "P", "seiffert-first"},
    {MeanKind::Arithmetic, "A", "arithmetic"},
    {MeanKind::NeumanSandor, "M", "neuman-sandor"},
    {MeanKind::SeiffertSecond, "T", "seiffert-second"},
    {MeanKind::Quadratic, "Q", "quadratic"},
    {MeanKind::ContraHarmonic, "C", "contra-harmonic"},
}};

// F(x)/x - 1 for F in {asinh, atanh, asin, atan}, as a polynomial in z = x^2
// through z^4. Truncation is below 2^-100 relative for |x| < kSeriesCutoff.
double excess_series(MeanKind kind, double z) {
  switch (kind) {
    case MeanKind::NeumanSandor:
      return z * (-1.0 / 6 + z * (3.0 / 40 + z * (-5.0 / 112 + z * (35.0 / 1152))));
    case MeanKind::Logarithmic:
      return z * (1.0 / 3 + z * (1.0 / 5 + z * (1.0 / 7 + z * (1.0 / 9))));
    case MeanKind::SeiffertFirst:
      return z * (1.0 / 6 + z * (3.0 / 40 + z * (5.0 / 112 + z * (35.0 / 1152))));
    case MeanKind::SeiffertSecond:
      return z * (-1.0 / 3 + z * (1.0 / 5 + z * (-1.0 / 7 + z * (1.0 / 9))));
    default:
      break;
  }
  throw std::logic_error("excess_series: not a transcendental mean");
}

// Inverse function behind each transcendental mean: mean/A = x / F(x).
double inverse_function(MeanKind kind, const ScaledVariable& v) {
  const double x = v.x();
  switch (kind) {
    case MeanKind::NeumanSandor:
      return asinh_stable(x);
    case MeanKind::Logarithmic:
      if (x > 0.5) return 0.5 * (std::log1p(x) - std::log(v.complement()));
      return std::atanh(x);
    case MeanKind::SeiffertFirst:
      if (x > 0.5) {
        return 0.5 * std::numbers::pi - 2.0 * std::asin(std::sqrt(0.5 * v.complement()));
      }
      return std::asin(x);
    case MeanKind::SeiffertSecond:
      return std::atan(x);
    default:
      break;
  }
  throw std::logic_error("inverse_function: not a transcendental mean");
}

bool transcendental(MeanKind kind) {
  return kind == MeanKind::Logarithmic || kind == MeanKind::SeiffertFirst ||
         kind == MeanKind::NeumanSandor || kind == MeanKind::SeiffertSecond;
}

// F(x)/x - 1.
double excess(MeanKind kind, const ScaledVariable& v) {
  const double x = v.x();
  if (x < kSeriesCutoff) return excess_series(kind, x * x);
  return inverse_function(kind, v) / x - 1.0;
}

// Below this x the subtraction in F(x)/x - 1 would cost log10(1/x^2) digits;
// scaled_log sums the full series instead.
constexpr double kLongSeriesCutoff = 0.3;
constexpr int kLongSeriesTerms = 24;  // 0.09^24 < 1e-25

// Coefficients of z^1 .. z^N in F(x)/x, z = x^2.
std::array<double, kLongSeriesTerms> long_series(MeanKind kind) {
  std::array<double, kLongSeriesTerms> c{};
  double central = 1.0;  // binom(2n, n) / 4^n
  for (int n = 1; n <= kLongSeriesTerms; ++n) {
    central *= (2.0 * n - 1) / (2.0 * n);
    const double odd = 1.0 / (2.0 * n + 1);
    const double sign = n % 2 ? -1.0 : 1.0;
    switch (kind) {
      case MeanKind::NeumanSandor:
        c[n - 1] = sign * central * odd;
        break;
      case MeanKind::SeiffertFirst:
        c[n - 1] = central * odd;
        break;
      case MeanKind::Logarithmic:
        c[n - 1] = odd;
        break;
      default:
        c[n - 1] = sign * odd;
        break;
    }
  }
  return c;
}

double excess_long_series(MeanKind kind, double z) {
  static const std::array<std::array<double, kLongSeriesTerms>, 4> tables = {
      long_series(MeanKind::Logarithmic), long_series(MeanKind::SeiffertFirst),
      long_series(MeanKind::NeumanSandor), long_series(MeanKind::SeiffertSecond)};
  const auto& c = tables[kind == MeanKind::Logarithmic     ? 0
                         : kind == MeanKind::SeiffertFirst ? 1
                         : kind == MeanKind::NeumanSandor  ? 2
                                                           : 3];
  double acc = 0.0;
  for (int k = kLongSeriesTerms - 1; k >= 0; --k) acc = c[k] + z * acc;
  return z * acc;
}

// F(x)/x - 1 to a few ulp of itself for every x.
double excess_accurate(MeanKind kind, const ScaledVariable& v) {
  const double x = v.x();
  if (x < kLongSeriesCutoff) return excess_long_series(kind, x * x);
  return excess(kind, v);
}

}  // namespace

std::string_view symbol(MeanKind kind) {
  return kNames[static_cast<std::size_t>(kind)].symbol;
}

std::string_view name(MeanKind kind) {
  return kNames[static_cast<std::size_t>(kind)].name;
}

std::optional<MeanKind> parse_mean_kind(std::string_view text) {
  for (const auto& entry : kNames) {
    if (text == entry.symbol || text == entry.name) return entry.kind;
  }
  return std::nullopt;
}

PositivePair::PositivePair(double a, double b) : a_(a), b_(b) {
  if (!(std::isfinite(a) && std::isfinite(b) && a > 0.0 && b > 0.0)) {
    throw std::domain_error("PositivePair: arguments must be finite and > 0, got (" +
                            std::to_string(a) + ", " + std::to_string(b) + ")");
  }
}

double PositivePair::x() const noexcept {
  const double s = a_ + b_;
  if (std::isfinite(s)) return (a_ - b_) / s;
  return (0.5 * a_ - 0.5 * b_) / (0.5 * a_ + 0.5 * b_);
}

double PositivePair::arithmetic() const noexcept {
  const double s = a_ + b_;
  return std::isfinite(s) ? 0.5 * s : 0.5 * a_ + 0.5 * b_;
}

ScaledVariable::ScaledVariable(double x, double complement)
    : x_(x), complement_(complement), t_(asinh_stable(x)) {}

ScaledVariable ScaledVariable::from_x(double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw std::domain_error("ScaledVariable: x must lie in [0, 1), got " + std::to_string(x));
  }
  return ScaledVariable(x, 1.0 - x);
}

ScaledVariable ScaledVariable::from_complement(double complement) {
  if (!(complement > 0.0 && complement <= 1.0)) {
    throw std::domain_error("ScaledVariable: 1 - x must lie in (0, 1]");
  }
  return ScaledVariable(1.0 - complement, complement);
}

ScaledVariable ScaledVariable::from_pair(const PositivePair& pair) {
  const double a = pair.a();
  const double b = pair.b();
  const double hi = a < b ? b : a;
  const double lo = a < b ? a : b;
  const double half_sum = pair.arithmetic();
  return ScaledVariable(0.5 * (hi - lo) / half_sum, lo / half_sum);
}

double asinh_stable(double x) noexcept {
  const double ax = std::fabs(x);
  double r;
  if (ax < kSeriesCutoff) {
    const double z = ax * ax;
    r = ax + ax * z * (-1.0 / 6 + z * (3.0 / 40 + z * (-5.0 / 112 + z * (35.0 / 1152))));
  } else if (ax > 0x1p28) {
    r = std::log(ax) + std::numbers::ln2;
  } else {
    // log(ax + sqrt(ax^2+1)) = log1p(ax + ax^2 / (1 + sqrt(1 + ax^2)))
    const double z = ax * ax;
    r = std::log1p(ax + z / (1.0 + std::sqrt(1.0 + z)));
  }
  return std::copysign(r, x);
}

double neuman_sandor(const PositivePair& pair) {
  const double a = pair.a();
  const double b = pair.b();
  if (a == b) return a;
  const double x = pair.x();
  if (std::fabs(x) < kSeriesCutoff) {
    return pair.arithmetic() / (1.0 + excess_series(MeanKind::NeumanSandor, x * x));
  }
  return (a - b) / (2.0 * asinh_stable(x));
}

double mean_eval(MeanKind kind, const PositivePair& pair) {
  const double a = pair.a();
  const double b = pair.b();
  if (a == b) return a;
  switch (kind) {
    // Arranged so that no intermediate overflows or underflows for any pair
    // of positive normal doubles.
    case MeanKind::Harmonic:
      return (std::max(a, b) / pair.arithmetic()) * std::min(a, b);
    case MeanKind::Geometric:
      return std::sqrt(a) * std::sqrt(b);
    case MeanKind::Arithmetic:
      return pair.arithmetic();
    case MeanKind::Quadratic:
      return std::hypot(a, b) * (0.5 * std::numbers::sqrt2);
    case MeanKind::ContraHarmonic: {
      const double hi = a < b ? b : a;
      const double ra = a / hi;
      const double rb = b / hi;
      return hi * ((ra * ra + rb * rb) / (ra + rb));
    }
    case MeanKind::NeumanSandor:
      return neuman_sandor(pair);
    case MeanKind::Logarithmic:
      // Far from the diagonal the complement can underflow; the textbook
      // form has no cancellation there.
      if (std::fabs(pair.x()) > 0.5) {
        const double hi = a < b ? b : a;
        const double lo = a < b ? a : b;
        const double r = hi / lo;
        const double lr = std::isfinite(r) ? std::log(r) : std::log(hi) - std::log(lo);
        return (hi - lo) / lr;
      }
      [[fallthrough]];
    case MeanKind::SeiffertFirst:
    case MeanKind::SeiffertSecond:
      return pair.arithmetic() * scaled_ratio(kind, ScaledVariable::from_pair(pair));
  }
  throw std::logic_error("mean_eval: unknown kind");
}

double scaled_ratio(MeanKind kind, double x) {
  return scaled_ratio(kind, ScaledVariable::from_x(x));
}

double scaled_ratio(MeanKind kind, const ScaledVariable& v) {
  const double x = v.x();
  switch (kind) {
    case MeanKind::Harmonic:
      return v.complement() * (1.0 + x);
    case MeanKind::Geometric:
      return std::sqrt(v.complement() * (1.0 + x));
    case MeanKind::Arithmetic:
      return 1.0;
    case MeanKind::Quadratic:
      return std::sqrt(1.0 + x * x);
    case MeanKind::ContraHarmonic:
      return 1.0 + x * x;
    default:
      break;
  }
  if (!transcendental(kind)) throw std::domain_error("scaled_ratio: unsupported kind");
  return 1.0 / (1.0 + excess(kind, v));
}

double scaled_log(MeanKind kind, const ScaledVariable& v) {
  const double x = v.x();
  switch (kind) {
    case MeanKind::Harmonic:
      return x < 0.5 ? std::log1p(-x * x) : std::log(v.complement()) + std::log1p(x);
    case MeanKind::Geometric:
      return 0.5 * scaled_log(MeanKind::Harmonic, v);
    case MeanKind::Arithmetic:
      return 0.0;
    case MeanKind::Quadratic:
      return 0.5 * std::log1p(x * x);
    case MeanKind::ContraHarmonic:
      return std::log1p(x * x);
    default:
      break;
  }
  if (!transcendental(kind)) throw std::domain_error("scaled_log: unsupported kind");
  return -std::log1p(excess_accurate(kind, v));
}

}  // namespace nsmean
