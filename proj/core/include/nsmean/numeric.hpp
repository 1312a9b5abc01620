#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace nsmean {

/// Value at h = 0 of the polynomial interpolating (h_i, y_i) (Neville's
/// scheme). Requires distinct abscissae and at least one point.
double extrapolate_to_zero(std::span<const double> h, std::span<const double> y);

struct RootResult {
  double root;
  double residual;   // f(root)
  int iterations;
};

/// Root of f on [lo, hi] where f(lo) and f(hi) differ in sign. Secant steps
/// are taken while they stay inside the bracket and shrink it fast enough;
/// otherwise the bracket is bisected. Stops when |f| <= f_tol or the bracket
/// is narrower than x_tol. Throws std::invalid_argument without a sign change.
RootResult find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                               double x_tol = 0.0, double f_tol = 0.0, int max_iterations = 200);

enum class Extremum { Minimum, Maximum };

struct GoldenResult {
  double argument;
  double value;
};

/// Golden-section search for a local extremum of f on [lo, hi]. Converges to
/// an endpoint when f is monotone there.
GoldenResult golden_section(const std::function<double(double)>& f, double lo, double hi,
                            Extremum kind, int iterations = 120);

}  // namespace nsmean
