#include "nsmean/bounds.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nsmean/numeric.hpp"

namespace nsmean {
namespace {

// Coefficients of z .. z^8 (z = x^2) in log(mean / A). Truncation at the
// cutoff is below 1e-24 relative.
using LogSeries = std::array<double, 8>;

LogSeries log_series(MeanKind kind) {
  LogSeries c{};
  switch (kind) {
    case MeanKind::Harmonic:  // log(1 - z)
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = -1.0 / static_cast<double>(k + 1);
      return c;
    case MeanKind::Geometric:  // log(1 - z) / 2
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = -0.5 / static_cast<double>(k + 1);
      return c;
    case MeanKind::Quadratic:  // log(1 + z) / 2
      for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = (k % 2 ? -0.5 : 0.5) / static_cast<double>(k + 1);
      }
      return c;
    case MeanKind::ContraHarmonic:  // log(1 + z)
      for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = (k % 2 ? -1.0 : 1.0) / static_cast<double>(k + 1);
      }
      return c;
    case MeanKind::NeumanSandor:  // -log(asinh(x) / x)
      return {1.0 / 6,
              -11.0 / 180,
              191.0 / 5670,
              -2497.0 / 113400,
              14797.0 / 935550,
              -92427157.0 / 7662154500,
              36740617.0 / 3831077250,
              -61430943169.0 / 7815397590000};
    default:
      break;
  }
  throw std::logic_error("log_series: no expansion for this kind");
}

// Exact z coefficient of the same series.
Rational leading_coefficient(MeanKind kind) {
  switch (kind) {
    case MeanKind::Harmonic:
      return Rational(-1);
    case MeanKind::Geometric:
      return Rational(-1, 2);
    case MeanKind::Quadratic:
      return Rational(1, 2);
    case MeanKind::ContraHarmonic:
      return Rational(1);
    case MeanKind::NeumanSandor:
      return Rational(1, 6);
    default:
      break;
  }
  throw std::logic_error("leading_coefficient: no expansion for this kind");
}

// sum_k c_k z^(k-1), i.e. the series divided by z.
double reduced(const LogSeries& c, double z) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = c[k] + z * acc;
  return acc;
}

bool catalog_pair(MeanKind lower, MeanKind upper) {
  const bool lower_ok = lower == MeanKind::Harmonic || lower == MeanKind::Geometric;
  const bool upper_ok = upper == MeanKind::Quadratic || upper == MeanKind::ContraHarmonic;
  return lower_ok && upper_ok;
}

}  // namespace

const std::vector<BoundCertificate>& certificate_catalog() {
  static const std::vector<BoundCertificate> catalog = {
      {"HQ", MeanKind::Harmonic, MeanKind::Quadratic, MeanKind::NeumanSandor, Rational(2, 9),
       Rational(0), "f-ratio"},
      {"GQ", MeanKind::Geometric, MeanKind::Quadratic, MeanKind::NeumanSandor, Rational(1, 3),
       Rational(0), "g-ratio"},
      {"HC", MeanKind::Harmonic, MeanKind::ContraHarmonic, MeanKind::NeumanSandor,
       Rational(5, 12), Rational(0), "h-ratio"},
      {"GC", MeanKind::Geometric, MeanKind::ContraHarmonic, MeanKind::NeumanSandor,
       Rational(5, 9), Rational(0), "gc-ratio"},
  };
  return catalog;
}

const BoundCertificate& find_certificate(std::string_view id) {
  for (const auto& cert : certificate_catalog()) {
    if (cert.id == id) return cert;
  }
  throw std::invalid_argument("unknown certificate '" + std::string(id) +
                              "' (expected HQ, GQ, HC or GC)");
}

double geometric_combination(MeanKind lower, MeanKind upper, double p, const PositivePair& pair) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("geometric_combination: p must lie in [0, 1]");
  }
  return std::pow(mean_eval(lower, pair), p) * std::pow(mean_eval(upper, pair), 1.0 - p);
}

double ratio_R(MeanKind lower, MeanKind upper, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("ratio_R: x must lie in (0, 1), got " + std::to_string(x));
  }
  return ratio_R(lower, upper, ScaledVariable::from_x(x));
}

double ratio_R(MeanKind lower, MeanKind upper, const ScaledVariable& v) {
  if (!catalog_pair(lower, upper)) {
    throw std::domain_error("ratio_R: base pair must be one of HQ, GQ, HC, GC");
  }
  if (!(v.x() > 0.0)) throw std::domain_error("ratio_R: x must be > 0");

  if (v.x() < kRatioSeriesCutoff) {
    // R = alpha + z * (...), alpha from exact leading terms, so the limit is
    // reproduced to the last bit and approached from below.
    const Rational cy = leading_coefficient(upper);
    const double alpha = ((cy - leading_coefficient(MeanKind::NeumanSandor)) /
                          (cy - leading_coefficient(lower)))
                             .to_double();
    const LogSeries y = log_series(upper);
    const LogSeries m = log_series(MeanKind::NeumanSandor);
    const LogSeries x = log_series(lower);
    LogSeries num{};
    LogSeries den{};
    for (std::size_t k = 0; k < den.size(); ++k) {
      den[k] = y[k] - x[k];
      if (k + 1 < num.size()) num[k] = (y[k + 1] - m[k + 1]) - alpha * (y[k + 1] - x[k + 1]);
    }
    const double z = v.x() * v.x();
    return alpha + z * reduced(num, z) / reduced(den, z);
  }
  const double ly = scaled_log(upper, v);
  const double lm = scaled_log(MeanKind::NeumanSandor, v);
  const double lx = scaled_log(lower, v);
  return (ly - lm) / (ly - lx);
}

SharpnessEstimate estimate_sharp_exponents(const BoundCertificate& cert, std::size_t grid_n) {
  const MeanKind x_kind = cert.lower_base;
  const MeanKind y_kind = cert.upper_base;

  std::array<double, 5> h{};
  std::array<double, 5> near_zero{};
  double x = 1e-2;
  for (std::size_t i = 0; i < h.size(); ++i, x *= 0.1) {
    h[i] = x * x;
    near_zero[i] = ratio_R(x_kind, y_kind, x);
  }
  const double alpha_hat = extrapolate_to_zero(h, near_zero);

  std::array<double, 6> s{};
  std::array<double, 6> near_one{};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double exponent = 8.0 * std::ldexp(1.0, static_cast<int>(i));  // 8, 16, ..., 256
    const double complement = std::pow(10.0, -exponent);
    s[i] = -1.0 / std::log(complement);
    near_one[i] = ratio_R(x_kind, y_kind, ScaledVariable::from_complement(complement));
  }
  const double beta_hat = extrapolate_to_zero(s, near_one);

  MonotoneCheck monotone = monotone_grid_check(
      [&](double xv) { return ratio_R(x_kind, y_kind, xv); }, 0.0, 1.0, grid_n);

  return {alpha_hat, beta_hat, std::fabs(alpha_hat - cert.alpha_star.to_double()),
          std::fabs(beta_hat - cert.beta_star.to_double()), std::move(monotone)};
}

}  // namespace nsmean
