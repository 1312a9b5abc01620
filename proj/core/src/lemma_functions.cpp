#include "nsmean/lemma_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nsmean/means.hpp"

namespace nsmean {
namespace {

void check_unit_interval(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error(std::string(what) + ": x must lie in (0, 1), got " + std::to_string(x));
  }
}

// Odd power series of F and G: both cancel to O(x^3) near 0.
constexpr double kAuxSeriesCutoff = 0.1;
constexpr double kFSeries[] = {54.0,
                               659.0 / 15,
                               -3887.0 / 420,
                               107.0 / 24,
                               -121675.0 / 44352,
                               313733.0 / 164736,
                               -520233.0 / 366080,
                               1259137.0 / 1131520,
                               -4773197.0 / 5292032,
                               55587675.0 / 74088448,
                               -109436327.0 / 171835392,
                               1739137621.0 / 3165388800};
constexpr double kGSeries[] = {5.0 / 3,      7.0 / 15,           -22.0 / 105,
                               8.0 / 63,     -304.0 / 3465,      2944.0 / 45045,
                               -256.0 / 5005, 31744.0 / 765765,  -14336.0 / 415701,
                               32768.0 / 1119195, -2818048.0 / 111546435, 12320768.0 / 557732175};

template <std::size_t N>
double odd_series(const double (&c)[N], double x) {
  const double x2 = x * x;
  double acc = 0.0;
  for (std::size_t i = N; i-- > 0;) acc = acc * x2 + c[i];
  return acc * x2 * x;
}

}  // namespace

double varphi_p(double x, double p) {
  check_unit_interval(x, "varphi_p");
  const double log_one_plus = std::log1p(x * x);
  const double log_one_minus = std::log1p(-x * x);
  const double log_m = scaled_log(MeanKind::NeumanSandor, ScaledVariable::from_x(x));
  return log_one_plus - log_m + p * (0.5 * log_one_minus - log_one_plus);
}

double varphi_p_derivative(double x, double p) {
  check_unit_interval(x, "varphi_p_derivative");
  const double x2 = x * x;
  const double root = std::sqrt(1.0 + x2);
  const double as = asinh_stable(x);
  return lemma24_aux(LemmaFunction::PhiPInner, x, p) / (x * (1.0 - x2 * x2) * root * as);
}

std::string_view name(LemmaFunction which) {
  switch (which) {
    case LemmaFunction::PhiPInner:
      return "phi_p";
    case LemmaFunction::F:
      return "lemma24-f";
    case LemmaFunction::G:
      return "lemma24-g";
  }
  return "?";
}

double lemma24_aux(LemmaFunction which, double x, double p) {
  check_unit_interval(x, "lemma24_aux");
  const double x2 = x * x;
  const double root = std::sqrt(1.0 + x2);
  const double as = asinh_stable(x);
  switch (which) {
    case LemmaFunction::PhiPInner:
      return x - x2 * x2 * x - (1.0 + (3.0 * p - 2.0) * x2 + (1.0 - p) * x2 * x2) * root * as;
    case LemmaFunction::F:
      if (x < kAuxSeriesCutoff) return odd_series(kFSeries, x);
      return x * (49.0 * x2 - 3.0) * root + (3.0 + 7.0 * x2 + 20.0 * x2 * x2) * as;
    case LemmaFunction::G:
      if (x < kAuxSeriesCutoff) return odd_series(kGSeries, x);
      return x * (1.0 + x2) - (1.0 - x2) * root * as;
  }
  throw std::logic_error("lemma24_aux: unknown function");
}

double lemma24_derivative(LemmaFunction which, double x) {
  check_unit_interval(x, "lemma24_derivative");
  const double x2 = x * x;
  const double root = std::sqrt(1.0 + x2);
  const double as = asinh_stable(x);
  switch (which) {
    case LemmaFunction::F:
      return 2.0 * x * (74.0 * x + 108.0 * x2 * x + (7.0 + 40.0 * x2) * root * as) / root;
    case LemmaFunction::G:
      return x * (4.0 * x * root + (1.0 + 3.0 * x2) * as) / root;
    case LemmaFunction::PhiPInner:
      break;
  }
  throw std::domain_error("lemma24_derivative: only F and G have closed-form derivatives");
}

}  // namespace nsmean
