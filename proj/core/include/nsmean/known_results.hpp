#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nsmean/means.hpp"

namespace nsmean {

/// One classical inequality evaluated at a pair. `margin` is the gap in
/// log(mean / A) units, positive when the inequality holds.
struct KnownResultCheck {
  std::string id;
  bool pass;
  double margin;
};

/// Identifiers, in the order check_known_results reports them.
const std::vector<std::string>& known_result_ids();

/// The strict chain H < G < L < P < A < M < T < Q < C; P M < A^2;
/// A T < M^2 < (A^2 + T^2)/2; Q^(1/3) A^(2/3) < M < Q^b A^(1-b) with
/// b = 2 (log(2+sqrt 2) - log 3) / log 2; C^(1/6) A^(5/6) < M < C^mu A^(1-mu)
/// with mu = b/2; L_p0 < M < L_2. Throws std::domain_error when a == b.
std::vector<KnownResultCheck> check_known_results(const PositivePair& pair);

/// 2 (log(2 + sqrt 2) - log 3) / log 2 = 0.3728...
double neuman_quadratic_exponent();
/// (log(2 + sqrt 2) - log 3) / log 2 = 0.1864...
double neuman_contraharmonic_exponent();

struct KyFanResult {
  /// mean(a,b) / mean(1-a,1-b) for G, L, P, A, M, T in that order.
  std::array<double, 6> ratios;
  /// log(ratio_{k+1}) - log(ratio_k), positive when strictly increasing.
  std::array<double, 5> margins;
  bool pass;
};

/// Requires 0 < a, b < 1/2 and a != b; throws std::domain_error otherwise.
KyFanResult ky_fan_check(const PositivePair& pair);

struct SweepSummary {
  std::string id;
  std::size_t checked;
  std::size_t failures;
  double min_margin;
};

/// check_known_results over log_uniform_pairs(count, seed), one summary per id.
/// Pairs with a == b are skipped.
std::vector<SweepSummary> sweep_known_results(std::size_t count, std::uint64_t seed);

/// ky_fan_check over `count` seeded pairs drawn log-uniform in [1e-3, 0.4999].
SweepSummary sweep_ky_fan(std::size_t count, std::uint64_t seed);

}  // namespace nsmean
