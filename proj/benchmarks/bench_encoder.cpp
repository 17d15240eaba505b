#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "gtrellis/encoder.hpp"
#include "gtrellis/refinement.hpp"

using namespace gtrellis;

namespace {

TablePtr coarse(TrellisSection const &s)
{
  return std::make_shared<GeneratorTable const>(representative_array(s));
}

void step_loop(benchmark::State &state, TablePtr const &table)
{
  Encoder enc(table);
  auto const x0 = table->section.x0().elements();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, x0.size() - 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(enc.step(x0[pick(rng)]));
  state.SetItemsProcessed(state.iterations());
}

void BM_EncoderStep(benchmark::State &state)
{
  step_loop(state, coarse(shift_register_section(2, static_cast<std::size_t>(state.range(0)))));
}
BENCHMARK(BM_EncoderStep)->DenseRange(2, 6, 2);

void BM_EncoderStepRefinedS3(benchmark::State &state)
{
  auto const s = complete_section(symmetric_group(3));
  step_loop(state, std::make_shared<GeneratorTable const>(refined_representative_array(s)));
}
BENCHMARK(BM_EncoderStepRefinedS3);

void BM_Track(benchmark::State &state)
{
  auto const table = coarse(shift_register_section(2, 3));
  Encoder enc(table);
  auto const x0 = table->section.x0().elements();
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, x0.size() - 1);
  PathSegment target;
  for (int n = 0; n < state.range(0); ++n)
    target.branches.push_back(enc.step(x0[pick(rng)]));
  for (auto _ : state)
    benchmark::DoNotOptimize(track(table, target, target.branches.front()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Track)->Arg(50)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
