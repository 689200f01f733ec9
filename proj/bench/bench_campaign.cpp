// Serial reference kernel against the OpenMP kernel on the same events, plus
// the two halves of an event (sampling, tally).

#include <benchmark/benchmark.h>
#include <omp.h>

#include "windsec/mc/campaign.hpp"

namespace mc = windsec::mc;

namespace {

mc::CampaignConfig config_for(const benchmark::State& state, int workers) {
  mc::CampaignConfig c;
  c.n_steps = state.range(1);
  c.master_seed = 1;
  c.workers = workers;
  return c;
}

void BM_BlockSerial(benchmark::State& state) {
  const auto c = config_for(state, 1);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc::run_block_serial(c, m, 0, 16));
  state.SetItemsProcessed(state.iterations() * 16);
}

void BM_BlockParallel(benchmark::State& state) {
  const auto c = config_for(state, 0);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc::run_block_parallel(c, m, 0, 16));
  state.SetItemsProcessed(state.iterations() * 16);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_SampleWalk(benchmark::State& state) {
  mc::ClosedWalk walk;
  mc::WalkScratch scratch;
  std::uint32_t p = 0;
  for (auto _ : state) {
    mc::sample_closed_walk(state.range(0), {1, 0, p++}, walk, scratch);
    benchmark::DoNotOptimize(walk.steps.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Tally(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<mc::ClosedWalk> walks;
  for (int p = 0; p < m; ++p) walks.push_back(mc::sample_closed_walk(state.range(1), mc::event_seed(1, m, 0, p)));
  mc::TallyWorkspace ws;
  for (auto _ : state) benchmark::DoNotOptimize(ws.tally(walks));
}

}  // namespace

BENCHMARK(BM_BlockSerial)->Args({1, 10000})->Args({16, 10000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlockParallel)->Args({1, 10000})->Args({16, 10000})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SampleWalk)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Tally)->Args({1, 100000})->Args({16, 100000})->Args({128, 100000})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
