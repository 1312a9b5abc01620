#include "nsmean/log_mean.hpp"

#include <cmath>
#include <stdexcept>

namespace nsmean {
namespace {

// Orders this close to 0 or -1 use the cancellation-free forms below.
constexpr double kNearOrder = 0.25;

// (S - 1)/p as a series in z = x^2, where S = ((1+x)^q - (1-x)^q) / (2qx),
// q = p + 1. Each coefficient prod_{j=2}^{2k} (q - j) / (2k+1)! already has
// the factor (q - 1) = p divided out.
double reduced_series(double p, double z) {
  const double q = p + 1.0;
  double prod = 1.0;
  double fact = 1.0;
  double zk = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 4; ++k) {
    prod *= (k == 1) ? (q - 2.0) : (q - (2.0 * k - 1.0)) * (q - 2.0 * k);
    fact *= (2.0 * k) * (2.0 * k + 1.0);
    zk *= z;
    sum += prod / fact * zk;
  }
  return sum;
}

// log(L_0 / A).
double log_l0(const ScaledVariable& v) {
  const double x = v.x();
  const double l1 = std::log1p(x);
  const double l2 = std::log(v.complement());
  return -1.0 + ((1.0 + x) * l1 - v.complement() * l2) / (2.0 * x);
}

// log((e^(qD) - 1) / q), continuous at q = 0 where it equals log D.
double log_expm1_over(double q, double d) {
  if (q == 0.0) return std::log(d);
  const double z = q * d;
  if (z > 30.0) return z + std::log1p(-std::exp(-z)) - std::log(q);
  return std::log(std::expm1(z) / q);
}

double log_general(double p, const ScaledVariable& v) {
  const double x = v.x();
  const double q = p + 1.0;
  const double l1 = std::log1p(x);
  const double l2 = std::log(v.complement());
  const double log_s = q * l2 + log_expm1_over(q, l1 - l2) - std::log(2.0 * x);
  return log_s / p;
}

// e^y - 1 - y to full relative accuracy.
double expm1_minus_linear(double y) {
  if (std::fabs(y) >= 0.5) return std::expm1(y) - y;
  double term = y * y / 2.0;
  double sum = term;
  for (int k = 3; k <= 20; ++k) {
    term *= y / k;
    sum += term;
  }
  return sum;
}

// p near 0. With s = 1 + xu, u uniform on [-1, 1]:
//   E[s^p] - 1 = (p log(L_0/A) + E'[h(p log s)]) / (p + 1),
// h(y) = e^y - 1 - y, so the O(1) parts never meet.
double log_near_zero(double p, const ScaledVariable& v) {
  const double x = v.x();
  const double c = v.complement();
  const double l1 = std::log1p(x);
  const double l2 = std::log(c);
  const double h = ((1.0 + x) * expm1_minus_linear(p * l1) - c * expm1_minus_linear(p * l2)) /
                   (2.0 * x);
  return std::log1p((p * log_l0(v) + h) / (p + 1.0)) / p;
}

// p near -1, q = p + 1: E[s^p] = ((h(q l1) - h(q l2)) / q + l1 - l2) / 2x.
double log_near_minus_one(double p, const ScaledVariable& v) {
  const double x = v.x();
  const double q = p + 1.0;
  const double l1 = std::log1p(x);
  const double l2 = std::log(v.complement());
  const double h = (expm1_minus_linear(q * l1) - expm1_minus_linear(q * l2)) / q;
  return std::log((h + (l1 - l2)) / (2.0 * x)) / p;
}

}  // namespace

double generalized_log_mean_scaled_log(double p, const ScaledVariable& v) {
  if (!std::isfinite(p)) throw std::domain_error("generalized_log_mean: p must be finite");
  const double x = v.x();
  if (x == 0.0) return 0.0;
  if (p == -1.0) return scaled_log(MeanKind::Logarithmic, v);

  if (x < kSeriesCutoff) {
    const double w = reduced_series(p, x * x);
    const double y = p * w;
    const double r = y == 0.0 ? 1.0 : std::log1p(y) / y;
    return w * r;
  }
  if (p == 0.0) return log_l0(v);
  if (std::fabs(p) < kNearOrder) return log_near_zero(p, v);
  if (std::fabs(p + 1.0) < kNearOrder) return log_near_minus_one(p, v);
  return log_general(p, v);
}

double generalized_log_mean(double p, const PositivePair& pair) {
  if (pair.diagonal()) return pair.a();
  if (p == 1.0) return pair.arithmetic();
  return pair.arithmetic() *
         std::exp(generalized_log_mean_scaled_log(p, ScaledVariable::from_pair(pair)));
}

double p0_equation(double p) { return std::pow(p + 1.0, 1.0 / p) - 2.0 * kTStar; }

RootResult solve_p0() { return find_root_bracketed(p0_equation, 1.0, 3.0, 0.0, 0.0); }

}  // namespace nsmean
