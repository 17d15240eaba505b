#include <benchmark/benchmark.h>

#include "gtrellis/refinement.hpp"

using namespace gtrellis;

namespace {

TrellisSection section_for(int which)
{
  switch (which) {
  case 0:
    return complete_section(symmetric_group(3));
  case 1:
    return shift_register_section(2, 4);
  default:
    return shift_register_section(3, 3);
  }
}

void BM_XCompositionChain(benchmark::State &state)
{
  auto const s = section_for(static_cast<int>(state.range(0)));
  auto const c = chains(s);
  for (auto _ : state)
    benchmark::DoNotOptimize(x_composition_chain(s, c));
}
BENCHMARK(BM_XCompositionChain)->DenseRange(0, 2);

void BM_SchreierArray(benchmark::State &state)
{
  auto const s = section_for(static_cast<int>(state.range(0)));
  auto const c = chains(s);
  for (auto _ : state)
    benchmark::DoNotOptimize(schreier_array(s, c));
}
BENCHMARK(BM_SchreierArray)->DenseRange(0, 2);

void BM_RefinedArray(benchmark::State &state)
{
  auto const s = section_for(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(refined_representative_array(s));
}
BENCHMARK(BM_RefinedArray)->DenseRange(0, 2);

} // namespace

BENCHMARK_MAIN();
