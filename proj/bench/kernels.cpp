// Parallel kernels against their serial reference implementations.

#include <benchmark/benchmark.h>

#include "permcm/bases.hpp"

using namespace permcm;

namespace {

const PermutationGroup& group_for(int which) {
  static const std::vector<PermutationGroup> groups{
      parse_group("(1,2,3,4)", 4),
      parse_group("(1,2,3,4,5)", 5),
      parse_group("(1,2,3,4,5)(2,5)(3,4)", 5),
      parse_group("(1,2)(3,4)", 5),
  };
  return groups[which];
}

void BM_GeneratorCount(benchmark::State& state) {
  const auto& g = group_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_generator_count(g, 2).count);
}

void BM_GeneratorCountReference(benchmark::State& state) {
  const auto& g = group_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_generator_count_reference(g, 2).count);
}

void BM_CMComplex(benchmark::State& state) {
  auto k = build_quotient_complex(group_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_cm_complex(k, Domain::Z()).cm);
}

void BM_CMComplexReference(benchmark::State& state) {
  auto k = build_quotient_complex(group_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_cm_complex_reference(k, Domain::Z()).cm);
}

void BM_Survey(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(survey(5, {}, static_cast<int>(state.range(0))).all_agree);
}

}  // namespace

BENCHMARK(BM_GeneratorCount)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneratorCountReference)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CMComplex)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CMComplexReference)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Survey)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
