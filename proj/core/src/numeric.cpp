#include "nsmean/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nsmean {

double extrapolate_to_zero(std::span<const double> h, std::span<const double> y) {
  if (h.empty() || h.size() != y.size()) {
    throw std::invalid_argument("extrapolate_to_zero: need matching, non-empty inputs");
  }
  std::vector<double> p(y.begin(), y.end());
  const std::size_t n = p.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      const double denom = h[i] - h[i + m];
      if (denom == 0.0) throw std::invalid_argument("extrapolate_to_zero: repeated abscissa");
      p[i] = (h[i] * p[i + 1] - h[i + m] * p[i]) / denom;
    }
  }
  return p[0];
}

RootResult find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                               double x_tol, double f_tol, int max_iterations) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  if ((flo > 0) == (fhi > 0)) {
    throw std::invalid_argument("find_root_bracketed: no sign change on the bracket");
  }

  double best = std::fabs(flo) < std::fabs(fhi) ? lo : hi;
  double fbest = std::fabs(flo) < std::fabs(fhi) ? flo : fhi;
  double last_width = hi - lo;
  int it = 0;
  for (; it < max_iterations; ++it) {
    const double width = hi - lo;
    if (width <= x_tol || std::fabs(fbest) <= f_tol) break;

    double candidate = hi - fhi * (hi - lo) / (fhi - flo);
    const bool inside = candidate > lo && candidate < hi;
    // Fall back to bisection when the secant leaves the bracket or the
    // bracket stopped halving.
    if (!inside || width > 0.5 * last_width) candidate = lo + 0.5 * width;
    last_width = width;

    const double fc = f(candidate);
    if (std::fabs(fc) < std::fabs(fbest)) {
      best = candidate;
      fbest = fc;
    }
    if (fc == 0.0) break;
    if ((fc > 0) == (flo > 0)) {
      lo = candidate;
      flo = fc;
    } else {
      hi = candidate;
      fhi = fc;
    }
    if (candidate == lo && candidate == hi) break;
    if (std::nextafter(lo, hi) >= hi) break;
  }
  return {best, fbest, it};
}

GoldenResult golden_section(const std::function<double(double)>& f, double lo, double hi,
                            Extremum kind, int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double sign = kind == Extremum::Maximum ? -1.0 : 1.0;
  auto g = [&](double x) { return sign * f(x); };

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(c), gd = g(d);
  for (int i = 0; i < iterations && b - a > 0.0; ++i) {
    if (gc < gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(d);
    }
  }
  // Endpoints are candidates too: monotone functions peak there.
  std::pair<double, double> best{c, gc};
  for (double x : {d, lo, hi}) {
    const double gx = g(x);
    if (gx < best.second) best = {x, gx};
  }
  return {best.first, sign * best.second};
}

}  // namespace nsmean
