#include <benchmark/benchmark.h>

#include "ucube/explore.hpp"
#include "ucube/hitting.hpp"
#include "ucube/random.hpp"
#include "ucube/spectral.hpp"
#include "ucube/verify.hpp"

namespace {

using namespace ucube;

SetFamily random_family(int d, Rng& rng) {
  SetFamily f(d);
  for (Mask x = 0; x < cube_size(d); ++x) {
    if (rng.next() & 1U) f.insert(x);
  }
  return f;
}

void BM_Transform(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  const WeightVector w = random_weights(d, rng, WeightRange::interior);
  const BooleanFunction f = indicator(random_family(d, rng));
  for (auto _ : state) benchmark::DoNotOptimize(transform(f, w));
}
BENCHMARK(BM_Transform)->DenseRange(4, 12, 2)->Unit(benchmark::kMicrosecond);

void BM_Influences(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(2);
  const WeightVector w = random_weights(d, rng, WeightRange::interior);
  const BooleanFunction f = indicator(random_family(d, rng));
  for (auto _ : state) benchmark::DoNotOptimize(influences(f, w));
}
BENCHMARK(BM_Influences)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_EnumerateUnionClosed(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_families(d, FamilyFilter::union_closed));
}
BENCHMARK(BM_EnumerateUnionClosed)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MinimalHittingSets(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(3);
  std::vector<Mask> gens;
  for (int k = 0; k < d; ++k) gens.push_back(static_cast<Mask>(1 + rng.below(cube_size(d) - 1)));
  const SetFamily f = union_closure(d, gens);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal_hitting_sets(f));
}
BENCHMARK(BM_MinimalHittingSets)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_SweepWeightedKarpas(benchmark::State& state) {
  const auto families = enumerate_families(4, FamilyFilter::union_closed);
  Rng rng(4);
  const std::vector<WeightVector> ws{random_weights(4, rng, WeightRange::interior)};
  for (auto _ : state) benchmark::DoNotOptimize(sweep(Theorem::karpas_weighted, families, ws));
}
BENCHMARK(BM_SweepWeightedKarpas)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  Rng rng(5);
  const SetFamily f = random_family(6, rng);
  const WeightVector w = random_weights(6, rng, WeightRange::interior);
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_measure(f, w, 100000, 9));
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
