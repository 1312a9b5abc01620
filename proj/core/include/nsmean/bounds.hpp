#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nsmean/means.hpp"
#include "nsmean/monotone.hpp"
#include "nsmean/rational.hpp"

namespace nsmean {

/// Sharp two-sided bound X^alpha Y^(1-alpha) < M < X^beta Y^(1-beta), valid
/// for all a != b exactly when alpha >= alpha_star and beta <= beta_star.
struct BoundCertificate {
  std::string id;           // "HQ", "GQ", "HC", "GC"
  MeanKind lower_base;      // X
  MeanKind upper_base;      // Y
  MeanKind inner = MeanKind::NeumanSandor;
  Rational alpha_star;
  Rational beta_star;
  /// Descriptor of the exponent ratio as a function of t (or x for GC).
  std::string ratio_descriptor;
};

/// HQ (2/9, 0), GQ (1/3, 0), HC (5/12, 0), GC (5/9, 0).
const std::vector<BoundCertificate>& certificate_catalog();

/// Throws std::invalid_argument for unknown ids.
const BoundCertificate& find_certificate(std::string_view id);

/// X(a,b)^p Y(a,b)^(1-p), p in [0, 1].
double geometric_combination(MeanKind lower, MeanKind upper, double p, const PositivePair& pair);

/// Below this x, ratio_R divides truncated series of its numerator and
/// denominator (both Theta(x^2)).
inline constexpr double kRatioSeriesCutoff = 1e-3;

/// (log Y - log M) / (log Y - log X) as a function of x in (0, 1). The double
/// inequality holds at x exactly when beta < ratio_R < alpha. Throws
/// std::domain_error unless (X, Y) is one of the catalog pairs and 0 < x < 1.
double ratio_R(MeanKind lower, MeanKind upper, double x);
/// Same, for 1 - x far below machine epsilon.
double ratio_R(MeanKind lower, MeanKind upper, const ScaledVariable& v);

struct SharpnessEstimate {
  double alpha_hat;      // extrapolated ratio_R(0+)
  double beta_hat;       // extrapolated ratio_R(1-)
  double alpha_error;    // |alpha_hat - alpha_star|
  double beta_error;     // |beta_hat - beta_star|
  /// ratio_R must be monotone decreasing on the grid for the endpoint limits
  /// to be the extrema.
  MonotoneCheck monotone;
  bool certified() const { return monotone.verdict == MonotoneVerdict::Decreasing; }
};

/// alpha_hat: polynomial extrapolation in h = x^2 over x = 1e-2 ... 1e-6.
/// beta_hat: polynomial extrapolation in s = -1/log(1-x) over
/// 1-x = 1e-8, 1e-16, ..., 1e-256 (ratio_R decays like 1/|log(1-x)|).
SharpnessEstimate estimate_sharp_exponents(const BoundCertificate& cert,
                                           std::size_t grid_n = 10000);

}  // namespace nsmean
