// Serial reference vs OpenMP kernels on the enumeration hot paths, plus
// the polynomial core-element path at scale. Run with --benchmark_filter
// to pick a subset.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "rps/analysis.hpp"
#include "rps/core.hpp"
#include "rps/game_table.hpp"
#include "rps/shapley.hpp"

namespace {

using namespace rps;

std::int64_t draw(std::mt19937& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

RawSet random_set(std::mt19937& rng, int players, int max_size,
                  std::int64_t max_weight) {
  RawSet set;
  const int size = static_cast<int>(draw(rng, 1, max_size));
  while (static_cast<int>(set.members.size()) < size) {
    const int p = static_cast<int>(draw(rng, 1, players));
    if (std::find(set.members.begin(), set.members.end(), p) ==
        set.members.end()) {
      set.members.push_back(p);
    }
  }
  set.value = draw(rng, 1, max_weight);
  return set;
}

RpsInstance random_instance(int players, int sets, int max_size,
                            std::uint32_t seed) {
  std::mt19937 rng(seed);
  RawInstance raw;
  raw.players = players;
  for (int i = 0; i < sets; ++i) {
    raw.rewards.push_back(random_set(rng, players, max_size, 20));
    raw.penalties.push_back(random_set(rng, players, max_size, 20));
  }
  return RpsInstance::validate(raw);
}

const RpsInstance& table_instance() {
  static const RpsInstance inst = random_instance(18, 6, 18, 1);
  return inst;
}

const RpsInstance& oracle_instance() {
  static const RpsInstance inst = random_instance(14, 6, 14, 2);
  return inst;
}

const GameTable& scan_table() {
  static const GameTable table = game_table(random_instance(9, 6, 9, 3));
  return table;
}

void BM_DenseCharTable(benchmark::State& state, Exec exec) {
  const RpsInstance& inst = table_instance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dense_char_table(inst, kDefaultEnumLimit, exec));
  }
}
BENCHMARK_CAPTURE(BM_DenseCharTable, serial, Exec::Serial);
BENCHMARK_CAPTURE(BM_DenseCharTable, openmp, Exec::Parallel);

void BM_ShapleyOracle(benchmark::State& state, Exec exec) {
  const RpsInstance& inst = oracle_instance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(shapley_oracle(inst, kDefaultEnumLimit, exec));
  }
}
BENCHMARK_CAPTURE(BM_ShapleyOracle, serial, Exec::Serial);
BENCHMARK_CAPTURE(BM_ShapleyOracle, openmp, Exec::Parallel);

void BM_ConvexityScan(benchmark::State& state, Exec exec) {
  const GameTable& table = scan_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_convex(table, kDefaultEnumLimit, exec));
  }
}
BENCHMARK_CAPTURE(BM_ConvexityScan, serial, Exec::Serial);
BENCHMARK_CAPTURE(BM_ConvexityScan, openmp, Exec::Parallel);

void BM_RpspSolve(benchmark::State& state, Exec exec) {
  const RpsInstance& inst = table_instance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(rpsp_solve(inst, kDefaultEnumLimit, exec));
  }
}
BENCHMARK_CAPTURE(BM_RpspSolve, serial, Exec::Serial);
BENCHMARK_CAPTURE(BM_RpspSolve, openmp, Exec::Parallel);

void BM_CoreElementLarge(benchmark::State& state) {
  static const RpsInstance inst = random_instance(10000, 10000, 10, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(core_element(inst));
  }
}
BENCHMARK(BM_CoreElementLarge)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
