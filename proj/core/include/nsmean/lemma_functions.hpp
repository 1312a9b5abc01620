#pragma once

#include <string_view>

namespace nsmean {

/// log(1+x^2) - log(x / asinh x) + p [log(1-x^2)/2 - log(1+x^2)], equal to
/// p log(G/A) + (1-p) log(C/A) - log(M/A). Domain 0 < x < 1.
/// Negative for p = 5/9 and positive for p = 0 on the whole domain.
double varphi_p(double x, double p);

/// d varphi_p / dx through the factorisation
/// phi_p(x) / (x (1-x^4) sqrt(1+x^2) asinh x).
double varphi_p_derivative(double x, double p);

enum class LemmaFunction {
  /// x - x^5 - [1 + (3p-2) x^2 + (1-p) x^4] sqrt(1+x^2) asinh x
  PhiPInner,
  /// x (49x^2 - 3) sqrt(1+x^2) + (3 + 7x^2 + 20x^4) asinh x
  F,
  /// x (1+x^2) - (1-x^2) sqrt(1+x^2) asinh x
  G,
};

std::string_view name(LemmaFunction which);

/// Domain 0 < x < 1; p is used only by PhiPInner. F(0+) = G(0+) = 0.
double lemma24_aux(LemmaFunction which, double x, double p = 0.0);

/// Closed-form derivatives of F and G, both positive on (0, 1):
///   F'(x) = 2x [74x + 108x^3 + (7 + 40x^2) sqrt(1+x^2) asinh x] / sqrt(1+x^2)
///   G'(x) = x [4x sqrt(1+x^2) + (1 + 3x^2) asinh x] / sqrt(1+x^2)
double lemma24_derivative(LemmaFunction which, double x);

}  // namespace nsmean
