#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "nsmean/rational.hpp"

namespace nsmean {

/// The six even power-series coefficient sequences. Each is the coefficient of
/// t^(2n+3) in a hyperbolic expression whose quotient is a derivative ratio:
///
///   phi    = [3 - cosh 2t][sinh 2t - 2t]          / (2t sinh^2 t [5 + cosh 2t])
///   g-ratio = [3 - cosh 2t][sinh 2t - 2t]          / (8t sinh^2 t)
///   h-ratio = [3 - cosh 2t][sinh 2t + t cosh 2t - 3t] / (16t sinh^2 t)
enum class CoefficientSequence {
  PhiNumerator,    // a_n  = 2^(2n+4) (n+3-2^(2n+1)) / (2n+3)!
  PhiDenominator,  // b_n  = 2^(2n+4) (1+2^(2n-1)) / (2n+2)!
  GNumerator,      // a'_n = 2^(2n+4) (n+3-2^(2n+1)) / (2n+3)!
  GDenominator,    // b'_n = 2^(2n+4) / (2n+2)!
  HNumerator,      // c'_n = 2^(2n+3) [(3-2^(2n))(2n+3)+3-2^(2n+2)] / (2n+3)!
  HDenominator,    // d'_n = 2^(2n+5) / (2n+2)!
};

/// A numerator/denominator pair of sequences.
enum class SequencePair { Phi, GRatio, HRatio };

inline constexpr std::array<SequencePair, 3> kSequencePairs = {
    SequencePair::Phi, SequencePair::GRatio, SequencePair::HRatio};

CoefficientSequence numerator_sequence(SequencePair pair);
CoefficientSequence denominator_sequence(SequencePair pair);
std::string_view name(CoefficientSequence seq);
std::string_view name(SequencePair pair);

/// Closed-form coefficient.
Rational coeff(CoefficientSequence seq, unsigned n);

/// Same coefficient read off the Taylor expansion of the hyperbolic
/// expression (Cauchy products of exact sinh/cosh series). Independent of the
/// closed form; the two must agree exactly.
Rational coeff_from_expansion(CoefficientSequence seq, unsigned n);

/// numerator_n / denominator_n.
Rational ratio_term(SequencePair pair, unsigned n);

/// (n+3-2^(2n+1)) / ((2n+3)(1+2^(2n-1))), the simplified phi ratio.
Rational phi_ratio_closed_form(unsigned n);

/// Published closed form of ratio_term(n+1) - ratio_term(n).
Rational difference_closed_form(SequencePair pair, unsigned n);

/// Thrown when a published closed form disagrees with direct computation.
class FormulaMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a ratio sequence switches direction more than once.
class InconclusivePattern : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DifferenceSign {
  int sign;                // -1, 0, +1
  Rational difference;     // ratio_term(n+1) - ratio_term(n)
  Rational closed_form;    // equals `difference`
};

/// Exact sign of ratio_term(n+1) - ratio_term(n), cross-checked against the
/// closed form. Throws FormulaMismatch on disagreement.
DifferenceSign difference_sign(SequencePair pair, unsigned n);

enum class Monotonicity { Increasing, Decreasing, DecreasingThenIncreasing, IncreasingThenDecreasing };

struct MonotonicityPattern {
  Monotonicity kind;
  /// Index of the extremal term when the direction switches once.
  std::optional<unsigned> switch_index;
  unsigned horizon;
};

std::string_view name(Monotonicity m);

/// Exact classification of ratio_term(0..horizon). Requires horizon >= 4.
/// Throws InconclusivePattern on a zero difference or on two or more switches.
MonotonicityPattern classify_ratio_sequence(SequencePair pair, unsigned horizon);

// ---------------------------------------------------------------------------
// Floating-point evaluation of the derivative ratios.

enum class EvalMethod { Direct, Series };

inline constexpr unsigned kDefaultSeriesTerms = 40;
inline constexpr unsigned kMaxSeriesTerms = 200;

struct SeriesEvaluation {
  double value;
  /// Bound on |value - limit|: geometric tail |term_N| / (1 - ratio) for each
  /// of numerator and denominator, propagated to the quotient.
  double tail_bound;
};

/// Truncated quotient sum_{n<terms} num_n t^2n / sum_{n<terms} den_n t^2n.
/// Valid for 0 <= t <= t*.
SeriesEvaluation series_quotient(SequencePair pair, double t, unsigned terms = kDefaultSeriesTerms);

/// The hyperbolic quotient the pair's coefficients expand. Direct requires
/// 0 < t <= t*; Series accepts t = 0 as well (continuous extension).
double derivative_quotient(SequencePair pair, double t, EvalMethod method,
                           unsigned terms = kDefaultSeriesTerms);

/// phi(t) = [3-cosh 2t][sinh 2t-2t] / (2t sinh^2 t [5+cosh 2t]).
double phi_eval(double t, EvalMethod method, unsigned terms = kDefaultSeriesTerms);

/// Direct formula above t = 0.05, series below.
double phi(double t);

/// phi'(t) from the quotient rule with the closed-form derivatives of the
/// numerator 8 sinh t [t cosh t - 2 sinh^3 t] and of the denominator
/// sinh t [20t cosh t + 4t cosh 3t + 9 sinh t + sinh 3t]; below t = 0.05 the
/// series is differentiated instead. Domain 0 < t <= t*.
double phi_derivative(double t);

/// Central finite difference of phi on a 113-bit path, h = max(t, 0.01) 1e-6.
double phi_derivative_fd(double t);

/// -(sqrt 2 - t*) / (sqrt 2 t*).
double phi_derivative_at_tstar_closed_form();

struct HyperbolicCheckpoint {
  int multiple;          // k in k t*
  double sinh_value;
  double cosh_value;
  double sinh_expected;  // 1, 2 sqrt 2, 7
  double cosh_expected;  // sqrt 2, 3, 5 sqrt 2
};

/// sinh and cosh at t*, 2t*, 3t*, evaluated on the extended path.
std::array<HyperbolicCheckpoint, 3> hyperbolic_checkpoints();

// ---------------------------------------------------------------------------
// Ratio functions in the t variable whose derivative quotients are the
// series above:
//   Phi    -> f(t) = [log cosh t - log(sinh t / t)]     / [log cosh t - log(1 - sinh^2 t)]
//   GRatio -> g(t) = [log cosh t - log(sinh t / t)]     / [log cosh t - log(1 - sinh^2 t)/2]
//   HRatio -> h(t) = [log cosh t - log(sinh t / t)/2]   / [log cosh t - log(1 - sinh^2 t)/2]

struct RatioParts {
  double numerator;
  double denominator;
};

/// Numerator and denominator, both vanishing at t = 0. Domain 0 <= t < t*.
RatioParts ratio_function_parts(SequencePair pair, double t);

/// Numerator / denominator on 0 < t < t*.
double ratio_function(SequencePair pair, double t);

}  // namespace nsmean
