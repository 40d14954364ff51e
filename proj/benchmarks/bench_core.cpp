#include <benchmark/benchmark.h>

#include "hurwitz/algebra.hpp"
#include "hurwitz/sampling.hpp"
#include "hurwitz/verifier.hpp"

namespace {

using namespace hurwitz;

void BM_BuildTable(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(dim));
}
BENCHMARK(BM_BuildTable)->RangeMultiplier(2)->Range(2, 16);

void BM_Multiply(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const StructureTable t = build_table(dim);
  RationalSampler s(1);
  const Element x = s.element(dim);
  const Element y = s.element(dim);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(x, y, t));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(2, 16);

void BM_VerifyComposition(benchmark::State& state) {
  const StructureTable t = build_table(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_composition(t));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0) * state.range(0));
}
BENCHMARK(BM_VerifyComposition)->RangeMultiplier(2)->Range(2, 16);

void BM_ZeroDivisorSearch16(benchmark::State& state) {
  const StructureTable t = build_table(16);
  for (auto _ : state) benchmark::DoNotOptimize(find_zero_divisors(t));
}
BENCHMARK(BM_ZeroDivisorSearch16);

void BM_PropositionSuite(benchmark::State& state) {
  const auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_proposition_suite(8, trials, 0));
}
BENCHMARK(BM_PropositionSuite)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Rotate(benchmark::State& state) {
  RationalSampler s(3);
  const Element q = s.nonzero_element(4);
  const Vector3 v{s.next(), s.next(), s.next()};
  for (auto _ : state) benchmark::DoNotOptimize(rotate(q, v));
}
BENCHMARK(BM_Rotate);

}  // namespace

BENCHMARK_MAIN();
