// Parallel kernels against their serial reference twins.

#include "dnacode/constraints.hpp"
#include "dnacode/kernels.hpp"

#include <benchmark/benchmark.h>

#include <set>

using namespace dnacode;

namespace {

std::vector<dna_seq>
sample(std::size_t n, std::size_t count)
{
  auto all = enumerate_constrained({ n, 0.4, 0.6, 3 });
  if (all.size() > count) {
    all.erase(all.begin() + static_cast<std::ptrdiff_t>(count), all.end());
  }
  return all;
}

std::vector<std::string>
suffix_keys(std::size_t n, std::size_t len)
{
  std::set<std::string> keys;
  for (const auto& s : enumerate_constrained({ n, 0.4, 0.6, 3 })) {
    keys.insert(s.str().substr(n - len));
  }
  return { keys.begin(), keys.end() };
}

design_config
ss_config(std::size_t n)
{
  design_config cfg;
  cfg.spec = constraint_spec{ n, 0.4, 0.6, 3 };
  cfg.t_th = 0.5;
  return cfg;
}

void
bm_enumerate(benchmark::State& state)
{
  const constraint_spec spec{ static_cast<std::size_t>(state.range(0)), 0.4, 0.6, 3 };
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_constrained(spec));
  }
}

void
bm_enumerate_serial(benchmark::State& state)
{
  const constraint_spec spec{ static_cast<std::size_t>(state.range(0)), 0.4, 0.6, 3 };
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_constrained_serial(spec));
  }
}

void
bm_pair_measures(benchmark::State& state)
{
  const auto words = sample(8, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_pair_measures(words, {}));
  }
}

void
bm_pair_measures_serial(benchmark::State& state)
{
  const auto words = sample(8, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_pair_measures_serial(words, {}));
  }
}

void
bm_link_keys(benchmark::State& state)
{
  const auto keys = suffix_keys(10, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(link_nearest_keys(keys));
  }
}

void
bm_link_keys_serial(benchmark::State& state)
{
  const auto keys = suffix_keys(10, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(link_nearest_keys_serial(keys));
  }
}

void
bm_graph(benchmark::State& state)
{
  const auto words = sample(6, static_cast<std::size_t>(state.range(0)));
  const auto cfg = ss_config(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_compatibility_graph(words, cfg));
  }
}

void
bm_graph_serial(benchmark::State& state)
{
  const auto words = sample(6, static_cast<std::size_t>(state.range(0)));
  const auto cfg = ss_config(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_compatibility_graph_serial(words, cfg));
  }
}

} // namespace

BENCHMARK(bm_enumerate)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_enumerate_serial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_pair_measures)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_pair_measures_serial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_link_keys)->Arg(4)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_link_keys_serial)->Arg(4)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_graph)->Arg(256)->Arg(1280)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_graph_serial)->Arg(256)->Arg(1280)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
