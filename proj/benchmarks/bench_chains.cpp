#include <benchmark/benchmark.h>

#include "gtrellis/generators.hpp"
#include "gtrellis/schreier.hpp"
#include "gtrellis/trellis.hpp"

using namespace gtrellis;

namespace {

void BM_Chains(benchmark::State &state)
{
  auto const s = shift_register_section(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(chains(s));
  state.SetLabel("|B|=" + std::to_string(s.b().order()));
}
BENCHMARK(BM_Chains)->DenseRange(2, 7);

void BM_SchreierMatrix(benchmark::State &state)
{
  auto const s = shift_register_section(2, static_cast<std::size_t>(state.range(0)));
  auto const c = chains(s);
  for (auto _ : state)
    benchmark::DoNotOptimize(schreier_matrix(c));
}
BENCHMARK(BM_SchreierMatrix)->DenseRange(2, 6);

void BM_RepresentativeArray(benchmark::State &state)
{
  auto const s = shift_register_section(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(representative_array(s));
}
BENCHMARK(BM_RepresentativeArray)->DenseRange(2, 6);

void BM_RepresentativeArrayS3(benchmark::State &state)
{
  auto const s = complete_section(symmetric_group(3));
  for (auto _ : state)
    benchmark::DoNotOptimize(representative_array(s));
}
BENCHMARK(BM_RepresentativeArrayS3);

} // namespace

BENCHMARK_MAIN();
