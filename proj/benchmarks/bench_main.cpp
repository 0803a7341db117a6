#include <benchmark/benchmark.h>

#include <random>

#include "smithkit/jacobitrudi.hpp"
#include "smithkit/jucysmurphy.hpp"
#include "smithkit/minors.hpp"
#include "smithkit/randomsnf.hpp"
#include "smithkit/sandpile.hpp"
#include "smithkit/snf.hpp"
#include "smithkit/symfunc.hpp"
#include "smithkit/varchenko.hpp"

using namespace smithkit;

namespace {

Matrix<BigInt> random_matrix(std::size_t n, long bound, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  Matrix<BigInt> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = uniform_entry(eng, bound);
  return a;
}

void BM_SnfInteger(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 100000, 1);
  for (auto _ : state) benchmark::DoNotOptimize(snf(a).diagonal);
}
BENCHMARK(BM_SnfInteger)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SnfIntegerTransforms(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 100, 2);
  SnfOptions opt;
  opt.transforms = true;
  for (auto _ : state) benchmark::DoNotOptimize(snf(a, opt).diagonal);
}
BENCHMARK(BM_SnfIntegerTransforms)->Arg(8)->Arg(16);

void BM_MinorGcds(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 30, 3);
  for (auto _ : state) benchmark::DoNotOptimize(snf_via_minors(a).diagonal);
}
BENCHMARK(BM_MinorGcds)->Arg(4)->Arg(6);

void BM_CriticalGroupComplete(benchmark::State& state) {
  const auto g = MultiGraph::complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(critical_group(g, 0).factors);
}
BENCHMARK(BM_CriticalGroupComplete)->Arg(8)->Arg(32);

void BM_PsiMatrixSnf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_thm_cai(n).snf);
}
BENCHMARK(BM_PsiMatrixSnf)->Arg(8)->Arg(12);

void BM_JacobiTrudi(benchmark::State& state) {
  const Partition lambda({7, 5, 5, 2});
  for (auto _ : state) benchmark::DoNotOptimize(verify_thm_jt(lambda, 4 + static_cast<int>(state.range(0))).snf);
}
BENCHMARK(BM_JacobiTrudi)->Arg(0)->Arg(3);

void BM_BraidSnf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(braid_snf(n, n == 5).diagonal);
}
BENCHMARK(BM_BraidSnf)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_JucysMurphy(benchmark::State& state) {
  const Partition lambda({3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(check_conjecture(lambda, 6).snf);
}
BENCHMARK(BM_JucysMurphy);

void BM_MonteCarlo(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto events = parse_events("a1,cyclic");
  SampleSpec spec{n, n, 100000, 4096, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(run_monte_carlo(spec, events).stats);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 4096);
}
BENCHMARK(BM_MonteCarlo)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
