#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <random>

#include "rps/analysis.hpp"
#include "rps/core.hpp"
#include "rps/shapley.hpp"
#include "test_support.hpp"

// The OpenMP kernels must reproduce the serial reference bit for bit, for
// any thread count: their reductions are exact sums and minima over total
// orders. Oversubscribing a small machine still exercises the merge paths.

using namespace rps;
using rps::testing::GenConfig;
using rps::testing::random_instance;

namespace {

struct ThreadCount {
  explicit ThreadCount(int n) { omp_set_num_threads(n); }
};

}  // namespace

TEST_CASE("dense table kernel matches the serial reference") {
  std::mt19937 rng(501);
  GenConfig cfg;
  cfg.max_players = 11;
  for (int threads : {2, 5, 8}) {
    ThreadCount guard(threads);
    for (int round = 0; round < 20; ++round) {
      const RpsInstance inst = random_instance(rng, cfg);
      CHECK(dense_char_table(inst, kDefaultEnumLimit, Exec::Serial) ==
            dense_char_table(inst, kDefaultEnumLimit, Exec::Parallel));
    }
  }
}

TEST_CASE("shapley oracle matches the serial reference") {
  std::mt19937 rng(502);
  GenConfig cfg;
  cfg.max_players = 9;
  for (int threads : {3, 7}) {
    ThreadCount guard(threads);
    for (int round = 0; round < 15; ++round) {
      const RpsInstance inst = random_instance(rng, cfg);
      CHECK(shapley_oracle(inst, kDefaultEnumLimit, Exec::Serial) ==
            shapley_oracle(inst, kDefaultEnumLimit, Exec::Parallel));
    }
  }
}

TEST_CASE("table scans match the serial reference") {
  std::mt19937 rng(503);
  GenConfig cfg;
  cfg.max_players = 7;
  ThreadCount guard(6);
  for (int round = 0; round < 25; ++round) {
    const RpsInstance inst = random_instance(rng, cfg);
    const GameTable table = game_table(inst);
    CHECK(is_convex(table, kDefaultEnumLimit, Exec::Serial).ok ==
          is_convex(table, kDefaultEnumLimit, Exec::Parallel).ok);
    CHECK(is_superadditive(table, kDefaultEnumLimit, Exec::Serial).ok ==
          is_superadditive(table, kDefaultEnumLimit, Exec::Parallel).ok);

    const RpspSolution serial =
        rpsp_solve(inst, kDefaultEnumLimit, Exec::Serial);
    const RpspSolution parallel =
        rpsp_solve(inst, kDefaultEnumLimit, Exec::Parallel);
    CHECK(serial.value == parallel.value);
    CHECK(serial.selection == parallel.selection);
  }
}

TEST_CASE("violating scans agree on the witness") {
  ThreadCount guard(4);

  // non-convex table: first violating pair must match exactly
  const GameTable bad = GameTable(3, {0, 3, 3, 1, 0, 1, 1, 2});
  const ConvexityCheck serial =
      is_convex(bad, kDefaultEnumLimit, Exec::Serial);
  const ConvexityCheck parallel =
      is_convex(bad, kDefaultEnumLimit, Exec::Parallel);
  REQUIRE(!serial.ok);
  REQUIRE(!parallel.ok);
  CHECK(serial.s == parallel.s);
  CHECK(serial.t == parallel.t);

  // core violations: same lexicographically least witness
  std::mt19937 rng(504);
  GenConfig cfg;
  cfg.min_players = 3;
  for (int round = 0; round < 30; ++round) {
    const RpsInstance inst = random_instance(rng, cfg);
    PaymentVector p(static_cast<std::size_t>(inst.player_count()));
    p[0] = inst.grand_value();  // efficient but usually unfair
    const CoreCheck s = is_core(inst, p, kDefaultEnumLimit, Exec::Serial);
    const CoreCheck par = is_core(inst, p, kDefaultEnumLimit, Exec::Parallel);
    CHECK(s.in_core == par.in_core);
    if (!s.in_core) {
      CHECK(s.witness == par.witness);
      CHECK(s.gap == par.gap);
    }
  }
}

TEST_CASE("results are identical across thread counts") {
  std::mt19937 rng(505);
  GenConfig cfg;
  cfg.min_players = 8;
  cfg.max_players = 8;
  const RpsInstance inst = random_instance(rng, cfg);

  ThreadCount one(1);
  const PaymentVector reference =
      shapley_oracle(inst, kDefaultEnumLimit, Exec::Parallel);
  for (int threads : {2, 3, 4, 6, 13}) {
    ThreadCount guard(threads);
    CHECK(shapley_oracle(inst, kDefaultEnumLimit, Exec::Parallel) ==
          reference);
  }
}
