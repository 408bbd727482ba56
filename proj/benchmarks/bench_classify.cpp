// Classification, minimization and semigroup timings on generated automata.

#include <random>

#include <benchmark/benchmark.h>

#include "gendef/generators.hpp"
#include "gendef/minimization.hpp"
#include "gendef/patterns.hpp"
#include "gendef/semigroup.hpp"

using namespace gendef;

namespace {

constexpr std::uint64_t kSeed = 20240601;

void BM_ClassifyLadder(benchmark::State& state) {
  const Dfa d = ladder_dfa(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClassifyLadder)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNSquared);

void BM_ClassifyRandom(benchmark::State& state) {
  std::mt19937_64 rng(kSeed);
  const Dfa d = random_dfa(static_cast<std::size_t>(state.range(0)), 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(classify(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClassifyRandom)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNSquared);

void BM_Minimize(benchmark::State& state) {
  std::mt19937_64 rng(kSeed);
  const Dfa d = random_dfa(static_cast<std::size_t>(state.range(0)), 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(minimize(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Minimize)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oNLogN);

void BM_SemigroupFourStates(benchmark::State& state) {
  const auto dfas = random_dfas(4, 2, kSeed, 256);
  for (auto _ : state) {
    for (const auto& d : dfas) benchmark::DoNotOptimize(enumerate_semigroup(d));
  }
}
BENCHMARK(BM_SemigroupFourStates);

void BM_SearchSyntacticComplexity(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_max_syntactic_complexity(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_SearchSyntacticComplexity)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
