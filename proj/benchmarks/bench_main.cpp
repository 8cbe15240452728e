#include <benchmark/benchmark.h>

#include <random>

#include "dp2/chern.hpp"
#include "dp2/cohom.hpp"
#include "dp2/galois.hpp"
#include "dp2/intlinalg.hpp"
#include "dp2/les.hpp"
#include "dp2/replay.hpp"

namespace {

std::vector<dp2::DivClass> random_classes(std::size_t n, int bound) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<dp2::DivClass> out(n);
  for (auto& d : out)
    for (std::size_t k = 0; k < dp2::kRank; ++k) d[k] = dist(rng);
  return out;
}

void BM_Classify(benchmark::State& state) {
  const auto classes = random_classes(1024, 3);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dp2::classify(classes[k++ % classes.size()]));
}
BENCHMARK(BM_Classify);

void BM_ClassOf(benchmark::State& state) {
  const auto curves = dp2::exceptional_curves();
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& a = curves[k % 56];
    const auto& b = curves[(k / 56) % 56];
    benchmark::DoNotOptimize(dp2::class_of(a.cls - b.cls));
    ++k;
  }
}
BENCHMARK(BM_ClassOf);

void BM_SurjectivityScan(benchmark::State& state) {
  for (auto _ : state) {
    unsigned mask[2] = {0, 0};
    for (const auto& a : dp2::exceptional_curves())
      for (const auto& b : dp2::exceptional_curves()) {
        const unsigned idx = dp2::class_of(a.cls - b.cls).index();
        mask[idx / 32] |= 1u << (idx % 32);
      }
    benchmark::DoNotOptimize(mask);
  }
}
BENCHMARK(BM_SurjectivityScan)->Unit(benchmark::kMillisecond);

void BM_CohomDims(benchmark::State& state) {
  const auto classes = random_classes(1024, static_cast<int>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dp2::cohom_dims(classes[k++ % classes.size()]));
}
BENCHMARK(BM_CohomDims)->Arg(2)->Arg(5)->Arg(10);

void BM_EulerPairing(benchmark::State& state) {
  const auto x = dp2::ch_of(2, dp2::twist_class(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(dp2::euler_pairing(x, x));
}
BENCHMARK(BM_EulerPairing);

void BM_LesSolve(benchmark::State& state) {
  const auto seq = dp2::DimSequence::parse("1,?,2,0,?,3,?,?,4,0");
  for (auto _ : state) benchmark::DoNotOptimize(dp2::les_solve(seq));
}
BENCHMARK(BM_LesSolve);

void BM_SmithDiagonal(benchmark::State& state) {
  const dp2::IntMatrix m = dp2::one_minus_sigma();
  for (auto _ : state) benchmark::DoNotOptimize(dp2::smith_diagonal(m));
}
BENCHMARK(BM_SmithDiagonal);

void BM_ReplayAll(benchmark::State& state) {
  const std::size_t threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dp2::run_all({"", threads}));
}
BENCHMARK(BM_ReplayAll)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
