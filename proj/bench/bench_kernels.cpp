// Serial reference vs OpenMP kernels on the larger worked examples.

#include <benchmark/benchmark.h>

#include "cubeconf/kernels.hpp"

using namespace cubeconf;

namespace {

struct Instance {
  const char* graph;
  int n;
};

constexpr Instance kInstances[] = {{"K5", 3}, {"K33", 4}, {"K33", 5}, {"Upsilon:8", 4}, {"cycle:12", 4}};

void apply_instances(benchmark::internal::Benchmark* b) {
  for (int i = 0; i < static_cast<int>(std::size(kInstances)); ++i) b->Arg(i);
}

Graph graph_of(const benchmark::State& state) { return builtin_from_spec(kInstances[state.range(0)].graph); }
int robots_of(const benchmark::State& state) { return kInstances[state.range(0)].n; }

void label(benchmark::State& state) {
  const auto& inst = kInstances[state.range(0)];
  state.SetLabel(std::string(inst.graph) + " n=" + std::to_string(inst.n));
}

template <bool Parallel>
void BM_Enumerate(benchmark::State& state) {
  const Graph g = graph_of(state);
  const int n = robots_of(state);
  for (auto _ : state) {
    auto cells = Parallel ? kernels::enumerate_cells_parallel(g, n, Mode::labeled, kDefaultCellBudget)
                          : kernels::enumerate_cells_serial(g, n, Mode::labeled, kDefaultCellBudget);
    benchmark::DoNotOptimize(cells);
  }
  label(state);
}

template <Execution Exec>
void BM_Build(benchmark::State& state) {
  const Graph g = graph_of(state);
  BuildOptions options;
  options.execution = Exec;
  for (auto _ : state) benchmark::DoNotOptimize(build(g, robots_of(state), Mode::labeled, options));
  label(state);
}

template <bool Parallel>
void BM_FlagCheck(benchmark::State& state) {
  const auto c = build(graph_of(state), robots_of(state), Mode::labeled);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? kernels::flag_check_parallel(c) : kernels::flag_check_serial(c));
  }
  label(state);
}

template <Execution Exec>
void BM_BettiF2(benchmark::State& state) {
  const auto c = build(graph_of(state), robots_of(state), Mode::labeled);
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(c, Field::f2, Exec));
  label(state);
}

}  // namespace

BENCHMARK(BM_Enumerate<false>)->Apply(apply_instances)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate<true>)->Apply(apply_instances)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Build<Execution::serial>)->Apply(apply_instances)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Build<Execution::parallel>)->Apply(apply_instances)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FlagCheck<false>)->Apply(apply_instances)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlagCheck<true>)->Apply(apply_instances)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BettiF2<Execution::serial>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BettiF2<Execution::parallel>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
