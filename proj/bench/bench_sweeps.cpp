// Serial reference vs OpenMP fan-out for the all-pairs connectivity sweeps and the oracle agreement sweep.

#include <benchmark/benchmark.h>

#include <vector>

#include "ecgraph/connect.hpp"
#include "ecgraph/oracle.hpp"
#include "ecgraph/reductions.hpp"
#include "ecgraph/supereuler.hpp"

using namespace ecg;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_ColourConnected(benchmark::State& state) {
  Graph g = mclosed_blowup(7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_colour_connected(g, exec_of(state)).connected);
  state.SetLabel(exec_of(state) == Exec::Parallel ? "parallel" : "serial");
}

void BM_TrailColourConnected(benchmark::State& state) {
  Graph g = mclosed_blowup(7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_trail_colour_connected(g, exec_of(state)).connected);
  state.SetLabel(exec_of(state) == Exec::Parallel ? "parallel" : "serial");
}

// Oracle vs fast-path agreement over a batch of small instances, one instance per iteration of the loop.
long agreement_sweep(const std::vector<Graph>& batch, bool parallel) {
  const OracleBudget wide = OracleBudget{}.unbounded_size();
  long agree = 0;
  const int count = static_cast<int>(batch.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : agree) if (parallel)
  for (int i = 0; i < count; ++i) {
    bool fast = supereulerian(batch[i], Exec::Serial).kind == SupereulerResult::Kind::SpanningTrail;
    agree += fast == oracle_supereulerian(batch[i], wide).has_value();
  }
  return agree;
}

void BM_OracleSweep(benchmark::State& state) {
  std::vector<Graph> batch;
  for (int i = 0; i < state.range(0); ++i) batch.push_back(mclosed_blowup(100 + i, 2 + i % 7));
  for (auto _ : state) benchmark::DoNotOptimize(agreement_sweep(batch, state.range(1) != 0));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_ColourConnected)->ArgsProduct({{20, 60, 120}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrailColourConnected)->ArgsProduct({{20, 60, 120}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSweep)->ArgsProduct({{200}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
