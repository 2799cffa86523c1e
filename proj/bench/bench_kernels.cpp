// Serial reference kernels against their OpenMP versions.

#include "wulab/batch.hpp"
#include "wulab/constructions.hpp"
#include "wulab/invariants.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace wulab;

namespace {

const Drawing& walked(const char* name) {
  static std::map<std::string, Drawing> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, random_finger_walk(base_drawing(name), 1, 8)).first;
  return it->second;
}

void profile_table(benchmark::State& state, const char* name, bool parallel) {
  const Drawing& d = walked(name);
  const auto cycles = enumerate_cycles(d.graph(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto v = parallel ? batch::profile_values_parallel(d, cycles) : batch::profile_values_serial(d, cycles);
    benchmark::DoNotOptimize(v);
  }
  state.counters["cells"] = static_cast<double>(cycles.size() * d.graph().vertex_count());
}

batch::TrialOutcome radon_trial(std::size_t, std::uint64_t seed) {
  return {radon_number(random_general_position_map(complete_graph(4), seed)).odd(), "even"};
}

void radon_trials(benchmark::State& state, bool parallel) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto s = parallel ? batch::run_trials_parallel(n, 7, radon_trial) : batch::run_trials_serial(n, 7, radon_trial);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

}  // namespace

BENCHMARK_CAPTURE(profile_table, cube_serial, "cube_nested_squares", false)->Arg(16)->Arg(64);
BENCHMARK_CAPTURE(profile_table, cube_parallel, "cube_nested_squares", true)->Arg(16)->Arg(64);
BENCHMARK_CAPTURE(profile_table, k5m45_serial, "planar_k5_minus_45", false)->Arg(64);
BENCHMARK_CAPTURE(profile_table, k5m45_parallel, "planar_k5_minus_45", true)->Arg(64);
BENCHMARK_CAPTURE(radon_trials, serial, false)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(radon_trials, parallel, true)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
