// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <memory>

#include "coxsep/core.hpp"
#include "coxsep/quotient.hpp"

using namespace coxsep;

namespace {

std::shared_ptr<const CoxeterGroup> pentagon() {
  std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  return std::make_shared<const CoxeterGroup>(
      SimplicialGraph::from_indices({"1", "2", "3", "4", "5"}, edges));
}

// Reduced core of the expanded ball plus an alternating tail.
Core tailed_core(std::size_t radius, std::size_t tail) {
  auto g = pentagon();
  auto r = reduce_to_point(expand(trivial_core(g), radius), 0);
  return grow_tail(r.core, r.singleton, 2, 0, tail);
}

void BM_BuildAction(benchmark::State& state) {
  const Core core = tailed_core(static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(build_action(core));
  state.counters["points"] = static_cast<double>(core.size());
}

void BM_BuildActionSerial(benchmark::State& state) {
  const Core core = tailed_core(static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(build_action_serial(core));
  state.counters["points"] = static_cast<double>(core.size());
}

void BM_VerifyCore(benchmark::State& state) {
  const Core core = expand(trivial_core(pentagon()), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_core(core, 3));
  state.counters["reps"] = static_cast<double>(core.size());
}

void BM_VerifyCoreSerial(benchmark::State& state) {
  const Core core = expand(trivial_core(pentagon()), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_core_serial(core, 3));
  state.counters["reps"] = static_cast<double>(core.size());
}

}  // namespace

BENCHMARK(BM_BuildAction)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildActionSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyCore)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyCoreSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
