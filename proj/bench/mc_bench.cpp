// Serial reference vs OpenMP batch kernels on the Monte Carlo estimators.
#include <benchmark/benchmark.h>

#include "tensorval/harness.hpp"
#include "tensorval/mc.hpp"

using namespace tensorval;

namespace {

McOptions options(benchmark::State& state) {
  McOptions o;
  o.samples = 20000;
  o.seed = 1;
  o.batch_size = 1024;
  o.workers = static_cast<int>(state.range(0));
  return o;
}

template <Backend B>
void kinematic_polygons(benchmark::State& state) {
  const Polytope a = random_polygon(8, 1), b = random_polygon(8, 2);
  const std::vector<Target> targets{{0, 0, 0}, {1, 1, 2}};
  const McOptions o = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_kinematic(a, b, targets, o, B));
  state.SetItemsProcessed(state.iterations() * o.samples);
}

template <Backend B>
void crofton_polytope(benchmark::State& state) {
  const Polytope p = random_polytope(12, 3);
  const std::vector<Target> targets{{0, 0, 0}, {1, 1, 2}};
  const McOptions o = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_crofton(p, 2, targets, o, B));
  state.SetItemsProcessed(state.iterations() * o.samples);
}

template <Backend B>
void parallel_volume_cube(benchmark::State& state) {
  const Polytope c = unit_cube();
  McOptions o = options(state);
  o.samples = 200000;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_parallel_volume(c, 0.5, o, B));
  state.SetItemsProcessed(state.iterations() * o.samples);
}

}  // namespace

BENCHMARK(kinematic_polygons<Backend::serial>)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(kinematic_polygons<Backend::parallel>)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(crofton_polytope<Backend::serial>)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(crofton_polytope<Backend::parallel>)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(parallel_volume_cube<Backend::serial>)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_volume_cube<Backend::parallel>)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
