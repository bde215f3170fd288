// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "sz5/catalog.hpp"
#include "sz5/multigraph.hpp"
#include "sz5/orientation.hpp"
#include "sz5/partition.hpp"

namespace {

const sz5::Multigraph& c5x5() {
  static const sz5::Multigraph g = sz5::make_cycle(5, 5);
  return g;
}

sz5::EnumerationBounds four_vertex_bounds() {
  sz5::EnumerationBounds b;
  b.vertex_count = 4;
  b.min_edges = 12;
  b.max_edges = 14;
  b.mu_max = 5;
  b.connected = true;
  return b;
}

void BM_szk_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sz5::is_strongly_zk_serial(c5x5(), 5).holds);
}

void BM_szk_parallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sz5::is_strongly_zk(c5x5(), 5, 0, jobs).holds);
}

void BM_enumerate_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sz5::enumerate_class_serial(four_vertex_bounds()).size());
}

void BM_enumerate_parallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sz5::enumerate_class(four_vertex_bounds(), jobs).size());
}

void BM_weight_serial(benchmark::State& state) {
  const sz5::Multigraph g = sz5::make_cycle(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(sz5::graph_weight_serial(g).weight);
}

void BM_weight_parallel(benchmark::State& state) {
  const sz5::Multigraph g = sz5::make_cycle(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(sz5::graph_weight(g, 0).weight);
}

}  // namespace

BENCHMARK(BM_szk_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_szk_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weight_serial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weight_parallel)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
