#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nsmean/bounds.hpp"
#include "nsmean/means.hpp"

namespace nsmean {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::size_t kDefaultSampleCount = 100000;

struct Violation {
  double a;
  double b;
  double exponent;
  std::string side;  // "lower" or "upper"

  bool operator==(const Violation&) const = default;
};

struct ExtremalRatio {
  double min_ratio;
  double max_ratio;
  double argmin_x;
  double argmax_x;

  bool operator==(const ExtremalRatio&) const = default;
};

struct VerificationReport {
  std::string certificate;
  double alpha;
  double beta;
  std::uint64_t samples;
  std::vector<Violation> violations;
  ExtremalRatio extremal;
  double elapsed_sec;
  std::uint64_t seed;

  bool passed() const { return violations.empty(); }
  bool operator==(const VerificationReport&) const = default;
};

/// `count` pairs with log a, log b uniform over [log lo, log hi], drawn from
/// mt19937_64(seed) with a platform-independent 53-bit mapping.
std::vector<PositivePair> log_uniform_pairs(std::size_t count, std::uint64_t seed,
                                            double lo = 1e-3, double hi = 1e3);

/// Checks X^alpha Y^(1-alpha) < M < X^beta Y^(1-beta) on the seeded sample
/// plus two deterministic wedges: x in [1e-6, 1e-1] and 1 - x in
/// [1e-6, 1e-1], 21 log-spaced points each. A golden-section search for the
/// extremum of ratio_R adds one point per wedge, over x in [1e-6, 1e-1] and
/// 1 - x in [1e-300, 1e-1]. Inequalities are compared in log(mean / A) form.
VerificationReport verify_double_inequality(const BoundCertificate& cert, double alpha, double beta,
                                            std::size_t sample_count = kDefaultSampleCount,
                                            std::uint64_t seed = kDefaultSeed);

/// Keys: certificate, alpha, beta, samples, violations[], extremal{minRatio,
/// maxRatio, argminX, argmaxX}, seed, elapsedSec, pass.
std::string to_json(const VerificationReport& report, int indent = 2);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
VerificationReport report_from_json(std::string_view text);

}  // namespace nsmean
