#include "nsmean/verification.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "nsmean/numeric.hpp"

namespace nsmean {
namespace {

constexpr int kWedgePoints = 21;

class SweepState {
 public:
  SweepState(const BoundCertificate& cert, double alpha, double beta)
      : lower_(cert.lower_base), upper_(cert.upper_base), alpha_(alpha), beta_(beta) {}

  void check(const PositivePair& pair) {
    const ScaledVariable v = ScaledVariable::from_pair(pair);
    if (v.x() == 0.0) return;
    ++samples_;
    const double lx = scaled_log(lower_, v);
    const double ly = scaled_log(upper_, v);
    const double lm = scaled_log(MeanKind::NeumanSandor, v);
    const double ratio = (ly - lm) / (ly - lx);
    if (ratio < extremal_.min_ratio) {
      extremal_.min_ratio = ratio;
      extremal_.argmin_x = v.x();
    }
    if (ratio > extremal_.max_ratio) {
      extremal_.max_ratio = ratio;
      extremal_.argmax_x = v.x();
    }
    const double lower_margin = lm - (alpha_ * lx + (1.0 - alpha_) * ly);
    const double upper_margin = (beta_ * lx + (1.0 - beta_) * ly) - lm;
    if (!(lower_margin > 0.0)) violations_.push_back({pair.a(), pair.b(), alpha_, "lower"});
    if (!(upper_margin > 0.0)) violations_.push_back({pair.a(), pair.b(), beta_, "upper"});
  }

  std::uint64_t samples() const { return samples_; }
  std::vector<Violation> take_violations() { return std::move(violations_); }
  const ExtremalRatio& extremal() const { return extremal_; }

 private:
  MeanKind lower_;
  MeanKind upper_;
  double alpha_;
  double beta_;
  std::uint64_t samples_ = 0;
  std::vector<Violation> violations_;
  ExtremalRatio extremal_{std::numeric_limits<double>::infinity(),
                          -std::numeric_limits<double>::infinity(), 0.0, 0.0};
};

// (1, b) realises x = (1-b)/(1+b).
PositivePair pair_for_x(double x) { return PositivePair(1.0, (1.0 - x) / (1.0 + x)); }

// (1, b) realises 1 - x = 2b/(1+b) = complement.
PositivePair pair_for_complement(double complement) {
  return PositivePair(1.0, complement / (2.0 - complement));
}

}  // namespace

std::vector<PositivePair> log_uniform_pairs(std::size_t count, std::uint64_t seed, double lo,
                                            double hi) {
  if (!(lo > 0.0 && lo < hi)) throw std::invalid_argument("log_uniform_pairs: bad range");
  std::mt19937_64 rng(seed);
  const double log_lo = std::log(lo);
  const double span = std::log(hi) - log_lo;
  auto draw = [&] {
    const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
    return std::exp(log_lo + span * u);
  };
  std::vector<PositivePair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double a = draw();
    const double b = draw();
    out.emplace_back(a, b);
  }
  return out;
}

VerificationReport verify_double_inequality(const BoundCertificate& cert, double alpha, double beta,
                                            std::size_t sample_count, std::uint64_t seed) {
  if (sample_count == 0) throw std::invalid_argument("verify_double_inequality: sampleCount >= 1");
  const auto start = std::chrono::steady_clock::now();
  SweepState state(cert, alpha, beta);

  for (const auto& pair : log_uniform_pairs(sample_count, seed)) state.check(pair);

  for (int k = 0; k < kWedgePoints; ++k) {
    const double e = -1.0 - 5.0 * k / (kWedgePoints - 1);
    state.check(pair_for_x(std::pow(10.0, e)));
    state.check(pair_for_complement(std::pow(10.0, e)));
  }

  // Refine towards the extremes of ratio_R inside each wedge: the sup is
  // approached as x -> 0 and the inf as x -> 1.
  const MeanKind xk = cert.lower_base;
  const MeanKind yk = cert.upper_base;
  const GoldenResult near_diagonal = golden_section(
      [&](double e) { return ratio_R(xk, yk, std::pow(10.0, e)); }, -6.0, -1.0,
      Extremum::Maximum);
  state.check(pair_for_x(std::pow(10.0, near_diagonal.argument)));
  const GoldenResult near_degenerate = golden_section(
      [&](double e) {
        return ratio_R(xk, yk, ScaledVariable::from_complement(std::pow(10.0, e)));
      },
      -300.0, -1.0, Extremum::Minimum);
  state.check(pair_for_complement(std::pow(10.0, near_degenerate.argument)));

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {cert.id,          alpha, beta, state.samples(), state.take_violations(),
          state.extremal(), elapsed, seed};
}

}  // namespace nsmean
