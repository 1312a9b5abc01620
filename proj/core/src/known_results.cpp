#include "nsmean/known_results.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "nsmean/log_mean.hpp"
#include "nsmean/verification.hpp"

namespace nsmean {
namespace {

double cached_p0() {
  static const double p0 = solve_p0().root;
  return p0;
}

}  // namespace

double neuman_quadratic_exponent() {
  return 2.0 * (std::log(2.0 + std::numbers::sqrt2) - std::log(3.0)) / std::numbers::ln2;
}

double neuman_contraharmonic_exponent() {
  return (std::log(2.0 + std::numbers::sqrt2) - std::log(3.0)) / std::numbers::ln2;
}

const std::vector<std::string>& known_result_ids() {
  static const std::vector<std::string> ids = {
      "chain:H<G", "chain:G<L", "chain:L<P", "chain:P<A", "chain:A<M", "chain:M<T",
      "chain:T<Q", "chain:Q<C", "P*M<A^2",   "A*T<M^2",   "M^2<(A^2+T^2)/2",
      "Q^(1/3)*A^(2/3)<M", "M<Q^b*A^(1-b)", "C^(1/6)*A^(5/6)<M", "M<C^mu*A^(1-mu)",
      "L_p0<M", "M<L_2"};
  return ids;
}

std::vector<KnownResultCheck> check_known_results(const PositivePair& pair) {
  if (pair.diagonal()) throw std::domain_error("check_known_results: requires a != b");
  const ScaledVariable v = ScaledVariable::from_pair(pair);

  std::array<double, 9> l{};
  for (std::size_t i = 0; i < kChainOrder.size(); ++i) l[i] = scaled_log(kChainOrder[i], v);
  const double lp = l[3], lm = l[5], lt = l[6], lq = l[7], lc = l[8];

  std::vector<double> margins;
  margins.reserve(known_result_ids().size());
  for (std::size_t i = 0; i + 1 < l.size(); ++i) margins.push_back(l[i + 1] - l[i]);
  margins.push_back(-(lp + lm));
  margins.push_back(2.0 * lm - lt);
  // log((1 + (T/A)^2) / 2) = log1p(expm1(2 log(T/A)) / 2)
  margins.push_back(std::log1p(0.5 * std::expm1(2.0 * lt)) - 2.0 * lm);
  margins.push_back(lm - lq / 3.0);
  margins.push_back(neuman_quadratic_exponent() * lq - lm);
  margins.push_back(lm - lc / 6.0);
  margins.push_back(neuman_contraharmonic_exponent() * lc - lm);
  margins.push_back(lm - generalized_log_mean_scaled_log(cached_p0(), v));
  margins.push_back(generalized_log_mean_scaled_log(2.0, v) - lm);

  std::vector<KnownResultCheck> out;
  out.reserve(margins.size());
  const auto& ids = known_result_ids();
  for (std::size_t i = 0; i < margins.size(); ++i) {
    out.push_back({ids[i], margins[i] > 0.0, margins[i]});
  }
  return out;
}

KyFanResult ky_fan_check(const PositivePair& pair) {
  const double a = pair.a();
  const double b = pair.b();
  if (!(a < 0.5 && b < 0.5)) throw std::domain_error("ky_fan_check: requires 0 < a, b < 1/2");
  if (a == b) throw std::domain_error("ky_fan_check: requires a != b");

  const PositivePair mirror(1.0 - a, 1.0 - b);
  const ScaledVariable v = ScaledVariable::from_pair(pair);
  const ScaledVariable w = ScaledVariable::from_pair(mirror);
  constexpr std::array<MeanKind, 6> kinds = {MeanKind::Geometric,     MeanKind::Logarithmic,
                                             MeanKind::SeiffertFirst, MeanKind::Arithmetic,
                                             MeanKind::NeumanSandor,  MeanKind::SeiffertSecond};

  KyFanResult out{};
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    out.ratios[k] = mean_eval(kinds[k], pair) / mean_eval(kinds[k], mirror);
  }
  out.pass = true;
  for (std::size_t k = 0; k + 1 < kinds.size(); ++k) {
    // Differences of scaled logs first: the log A terms cancel exactly.
    out.margins[k] = (scaled_log(kinds[k + 1], v) - scaled_log(kinds[k], v)) -
                     (scaled_log(kinds[k + 1], w) - scaled_log(kinds[k], w));
    out.pass = out.pass && out.margins[k] > 0.0;
  }
  return out;
}

std::vector<SweepSummary> sweep_known_results(std::size_t count, std::uint64_t seed) {
  std::vector<SweepSummary> out;
  for (const auto& id : known_result_ids()) {
    out.push_back({id, 0, 0, std::numeric_limits<double>::infinity()});
  }
  for (const auto& pair : log_uniform_pairs(count, seed)) {
    if (pair.diagonal()) continue;
    const auto checks = check_known_results(pair);
    for (std::size_t k = 0; k < checks.size(); ++k) {
      ++out[k].checked;
      if (!checks[k].pass) ++out[k].failures;
      out[k].min_margin = std::min(out[k].min_margin, checks[k].margin);
    }
  }
  return out;
}

SweepSummary sweep_ky_fan(std::size_t count, std::uint64_t seed) {
  SweepSummary out{"ky-fan", 0, 0, std::numeric_limits<double>::infinity()};
  for (const auto& pair : log_uniform_pairs(count, seed, 1e-3, 0.4999)) {
    if (pair.diagonal()) continue;
    const KyFanResult r = ky_fan_check(pair);
    ++out.checked;
    if (!r.pass) ++out.failures;
    out.min_margin = std::min(out.min_margin, *std::min_element(r.margins.begin(), r.margins.end()));
  }
  return out;
}

}  // namespace nsmean
