#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace nsmean {

/// The nine classical bivariate means. Enumerator order is the chain order
/// H < G < L < P < A < M < T < Q < C, which holds strictly whenever a != b.
enum class MeanKind {
  Harmonic,
  Geometric,
  Logarithmic,
  SeiffertFirst,
  Arithmetic,
  NeumanSandor,
  SeiffertSecond,
  Quadratic,
  ContraHarmonic,
};

inline constexpr std::array<MeanKind, 9> kChainOrder = {
    MeanKind::Harmonic,       MeanKind::Geometric,    MeanKind::Logarithmic,
    MeanKind::SeiffertFirst,  MeanKind::Arithmetic,   MeanKind::NeumanSandor,
    MeanKind::SeiffertSecond, MeanKind::Quadratic,    MeanKind::ContraHarmonic,
};

/// One-letter symbol ("H", "G", ..., "C").
std::string_view symbol(MeanKind kind);
/// Lower-case descriptive name ("harmonic", "neuman-sandor", ...).
std::string_view name(MeanKind kind);
/// Accepts either the symbol or the descriptive name, case-sensitive.
std::optional<MeanKind> parse_mean_kind(std::string_view text);

/// log(1 + sqrt(2)) = asinh(1).
inline constexpr double kTStar = 0.88137358701954302523;

/// Below this |x| the quotients x/F(x) (F one of asinh, atanh, asin, atan)
/// switch to their degree-8 even series.
inline constexpr double kSeriesCutoff = 0x1p-10;

/// Two strictly positive, finite reals. Construction throws std::domain_error
/// otherwise.
class PositivePair {
 public:
  PositivePair(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

  /// (a - b) / (a + b), always in (-1, 1).
  double x() const noexcept;
  /// (a + b) / 2, without overflow.
  double arithmetic() const noexcept;
  bool diagonal() const noexcept { return a_ == b_; }

 private:
  double a_;
  double b_;
};

/// x = |a - b| / (a + b) together with its complement 1 - x and t = asinh(x).
/// The complement is carried separately so that pairs with b/a far below
/// machine epsilon keep full relative accuracy in 1 - x.
class ScaledVariable {
 public:
  /// x in [0, 1).
  static ScaledVariable from_x(double x);
  /// complement = 1 - x in (0, 1].
  static ScaledVariable from_complement(double complement);
  static ScaledVariable from_pair(const PositivePair& pair);

  double x() const noexcept { return x_; }
  double complement() const noexcept { return complement_; }
  double t() const noexcept { return t_; }

 private:
  ScaledVariable(double x, double complement);

  double x_;
  double complement_;
  double t_;
};

/// Inverse hyperbolic sine with relative error of a few ulp for every finite
/// argument, including |x| far below 1 and negative x.
double asinh_stable(double x) noexcept;

/// Value of the mean of the given kind. The diagonal a == b returns a exactly.
double mean_eval(MeanKind kind, const PositivePair& pair);

/// (a - b) / (2 asinh((a - b)/(a + b))), continuously extended to M(a,a) = a.
double neuman_sandor(const PositivePair& pair);

/// mean(a, b) / A(a, b) as a function of x alone. Throws std::domain_error
/// unless 0 <= x < 1.
double scaled_ratio(MeanKind kind, double x);
double scaled_ratio(MeanKind kind, const ScaledVariable& v);

/// log(mean / A), accurate to a few ulp of its own magnitude (the values are
/// O(x^2) near the diagonal, and computed without cancellation).
double scaled_log(MeanKind kind, const ScaledVariable& v);

}  // namespace nsmean
