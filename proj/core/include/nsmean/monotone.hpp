#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nsmean {

/// A named real function of one variable with its natural domain. `eval`
/// must also return the one-sided limit at a domain endpoint when a shifted
/// quotient is anchored there.
struct FunctionDescriptor {
  std::string name;
  double lower;
  double upper;
  std::function<double(double)> eval;
};

enum class MonotoneVerdict { Increasing, Decreasing, Violation };

std::string_view name(MonotoneVerdict v);

struct MonotoneWitness {
  double x0;
  double x1;
  double value0;
  double value1;
};

struct MonotoneCheck {
  MonotoneVerdict verdict;
  /// All consecutive values equal (reported as Increasing).
  bool constant = false;
  /// Smallest |q(x_{i+1}) - q(x_i)| over the grid.
  double min_gap = 0.0;
  std::size_t points = 0;
  /// First offending pair of grid points when verdict == Violation.
  std::optional<MonotoneWitness> witness;
};

/// Strict monotonicity of f on the grid_n interior points
/// lo + (hi - lo) i / (grid_n + 1), i = 1..grid_n. Numerical evidence only.
MonotoneCheck monotone_grid_check(const std::function<double(double)>& f, double lo, double hi,
                                  std::size_t grid_n);

enum class Anchor { Lower, Upper };

/// Grid check of the shifted quotient (f1(x) - f1(c)) / (f2(x) - f2(c)) with
/// c = lo (Anchor::Lower) or c = hi (Anchor::Upper). f2 should be strictly
/// monotone on [lo, hi].
MonotoneCheck monotone_ratio_check(const FunctionDescriptor& f1, const FunctionDescriptor& f2,
                                   double lo, double hi, std::size_t grid_n,
                                   Anchor anchor = Anchor::Lower);

/// Named descriptors: "phi", "f-ratio", "g-ratio", "h-ratio", "gc-ratio",
/// "f1", "f2", "g1", "g2", "h1", "h2", "varphi_p" (p = 5/9), "lemma24-f",
/// "lemma24-g", "identity".
const std::vector<FunctionDescriptor>& descriptor_catalog();

/// Throws std::invalid_argument for unknown names.
const FunctionDescriptor& find_descriptor(std::string_view name);

/// varphi_p for an arbitrary p, on (0, 1) with limit 0 at x = 0.
FunctionDescriptor varphi_descriptor(double p);

}  // namespace nsmean
