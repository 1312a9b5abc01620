#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nsmean/bounds.hpp"
#include "nsmean/log_mean.hpp"
#include "nsmean/means.hpp"
#include "nsmean/series.hpp"
#include "nsmean/verification.hpp"

using namespace nsmean;

namespace {

std::vector<PositivePair> pairs(std::size_t n) { return log_uniform_pairs(n, 1); }

void BM_MeanEval(benchmark::State& state) {
  const auto kind = static_cast<MeanKind>(state.range(0));
  const auto ps = pairs(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mean_eval(kind, ps[i++ & 1023]));
  }
  state.SetLabel(std::string(symbol(kind)));
}
BENCHMARK(BM_MeanEval)->DenseRange(0, 8);

void BM_RatioR(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(1e-4, 1 - 1e-4);
  std::vector<double> xs(1024);
  for (double& x : xs) x = u(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ratio_R(MeanKind::Harmonic, MeanKind::Quadratic, xs[i++ & 1023]));
  }
}
BENCHMARK(BM_RatioR);

void BM_GeneralizedLogMean(benchmark::State& state) {
  const auto ps = pairs(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generalized_log_mean(1.8435, ps[i++ & 1023]));
  }
}
BENCHMARK(BM_GeneralizedLogMean);

void BM_RatioTerms(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    for (unsigned k = 0; k <= n; ++k) benchmark::DoNotOptimize(ratio_term(SequencePair::Phi, k));
  }
}
BENCHMARK(BM_RatioTerms)->Arg(40)->Arg(200);

void BM_Verify(benchmark::State& state) {
  const auto& cert = find_certificate("HQ");
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_double_inequality(cert, 2.0 / 9, 0.0, n, kDefaultSeed));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_Verify)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
