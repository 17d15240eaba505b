#include <benchmark/benchmark.h>

#include "gtrellis/search.hpp"

using namespace gtrellis;

namespace {

void BM_SearchKlein(benchmark::State &state)
{
  auto const z2 = cyclic_group(2);
  auto const klein = direct_product(*z2, *z2);
  for (auto _ : state)
    benchmark::DoNotOptimize(search_subdirect(klein, SearchFilter{}));
}
BENCHMARK(BM_SearchKlein);

void BM_SearchS3Nonabelian(benchmark::State &state)
{
  auto const s3 = symmetric_group(3);
  SearchFilter filter;
  filter.nonabelian = true;
  for (auto _ : state)
    benchmark::DoNotOptimize(search_subdirect(s3, filter));
}
BENCHMARK(BM_SearchS3Nonabelian);

void BM_SearchZ2Cubed(benchmark::State &state)
{
  auto const z2 = cyclic_group(2);
  auto const g = direct_product(*direct_product(*z2, *z2), *z2);
  for (auto _ : state)
    benchmark::DoNotOptimize(search_subdirect(g, SearchFilter{}));
}
BENCHMARK(BM_SearchZ2Cubed)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
