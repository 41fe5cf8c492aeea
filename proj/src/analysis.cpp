#include "rps/analysis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <string>

#include "rps/error.hpp"

namespace rps {

namespace {

void check_pair_scan(int players, int max_n) {
  if (players > max_n || players > kMaxMaskPlayers) {
    fail(ErrorKind::TooLarge,
         "pairwise check over 4^" + std::to_string(players) +
             " coalition pairs (limit " + std::to_string(max_n) + ")");
  }
}

ConvexityCheck from_scan(const PairScan& scan, int players) {
  if (!scan.found) return {};
  return {false, Coalition::from_mask(players, scan.s),
          Coalition::from_mask(players, scan.t)};
}

std::int64_t integral_weight(const Rational& value, const char* what) {
  if (!is_integral(value)) {
    fail(ErrorKind::IntegralityRequired,
         std::string(what) + " = " + ratio_string(value) +
             " is not an integer");
  }
  const BigInt num = numerator(value);
  if (num > std::numeric_limits<std::int64_t>::max() ||
      num < std::numeric_limits<std::int64_t>::min()) {
    fail(ErrorKind::Overflow, std::string(what) + " leaves the 64-bit range");
  }
  return static_cast<std::int64_t>(num);
}

// Builds the instance for a residual table with zero singleton values;
// sigma holds the singleton weights split off beforehand (zero when the
// strict entry point was used).
RpsInstance embed_residual(const std::array<Rational, 8>& residual,
                           const std::array<std::int64_t, 3>& sigma) {
  const std::int64_t v12 = integral_weight(residual[0b011], "pair value");
  const std::int64_t v13 = integral_weight(residual[0b101], "pair value");
  const std::int64_t v23 = integral_weight(residual[0b110], "pair value");
  const std::int64_t v_full =
      integral_weight(residual[0b111], "grand coalition value");
  const std::int64_t d = std::min({v12, v13, v23});

  // Remainder assigned to the full-set reward; non-negative whenever the
  // input is convex.
  const std::int64_t a_full = v_full - (v12 + v13 + v23) + d;
  if (a_full < 0) {
    fail(ErrorKind::NegativeResidual,
         "full-set reward weight " + std::to_string(a_full));
  }

  RawInstance raw;
  raw.players = 3;
  for (int k = 0; k < 3; ++k) {
    if (sigma[static_cast<std::size_t>(k)] > 0) {
      raw.rewards.push_back({{k + 1}, sigma[static_cast<std::size_t>(k)]});
    }
  }
  if (d > 0) {
    for (int k = 1; k <= 3; ++k) raw.rewards.push_back({{k}, d});
  }
  if (v12 - d > 0) raw.rewards.push_back({{1, 2}, v12 - d});
  if (v13 - d > 0) raw.rewards.push_back({{1, 3}, v13 - d});
  if (v23 - d > 0) raw.rewards.push_back({{2, 3}, v23 - d});
  if (a_full > 0) raw.rewards.push_back({{1, 2, 3}, a_full});

  for (int k = 0; k < 3; ++k) {
    if (sigma[static_cast<std::size_t>(k)] < 0) {
      raw.penalties.push_back({{k + 1}, -sigma[static_cast<std::size_t>(k)]});
    }
  }
  if (d > 0) raw.penalties.push_back({{1, 2, 3}, d});

  return RpsInstance::validate(raw);
}

std::array<Rational, 8> table_values(const GameTable& table) {
  std::array<Rational, 8> out;
  for (Mask m = 0; m < 8; ++m) out[m] = table.value(m);
  return out;
}

void check_three_player_convex(const GameTable& table) {
  if (table.player_count() != 3) {
    fail(ErrorKind::NotThreePlayers,
         "table has " + std::to_string(table.player_count()) + " players");
  }
  const PairScan scan = convexity_scan(table.values(), 3, Exec::Serial);
  if (scan.found) {
    fail(ErrorKind::NotConvex,
         "violated at S={" + Coalition::from_mask(3, scan.s).to_string() +
             "}, T={" + Coalition::from_mask(3, scan.t).to_string() + "}");
  }
}

}  // namespace

ConvexityCheck is_convex(const GameTable& table, int max_n, Exec exec) {
  check_pair_scan(table.player_count(), max_n);
  return from_scan(convexity_scan(table.values(), table.player_count(), exec),
                   table.player_count());
}

ConvexityCheck is_superadditive(const GameTable& table, int max_n, Exec exec) {
  check_pair_scan(table.player_count(), max_n);
  return from_scan(
      superadditivity_scan(table.values(), table.player_count(), exec),
      table.player_count());
}

RpsInstance embed_three_player(const GameTable& table) {
  check_three_player_convex(table);
  const std::array<Rational, 8> values = table_values(table);

  std::array<std::int64_t, 3> sigma{};
  for (int k = 0; k < 3; ++k) {
    sigma[static_cast<std::size_t>(k)] =
        integral_weight(values[std::size_t{1} << k], "singleton value");
  }
  std::array<Rational, 8> residual;
  for (Mask m = 0; m < 8; ++m) {
    Rational shift = 0;
    for (int k = 0; k < 3; ++k) {
      if ((m >> k) & 1) shift += sigma[static_cast<std::size_t>(k)];
    }
    residual[m] = values[m] - shift;
  }
  return embed_residual(residual, sigma);
}

RpsInstance embed_three_player_zero_singletons(const GameTable& table) {
  check_three_player_convex(table);
  const std::array<Rational, 8> values = table_values(table);
  for (int k = 0; k < 3; ++k) {
    if (values[std::size_t{1} << k] != 0) {
      fail(ErrorKind::NonZeroSingletons,
           "player " + std::to_string(k + 1) + " has singleton value " +
               ratio_string(values[std::size_t{1} << k]));
    }
  }
  return embed_residual(values, {0, 0, 0});
}

RpspSolution rpsp_solve(const RpsInstance& instance, int max_n, Exec exec) {
  const std::vector<std::int64_t> table =
      dense_char_table(instance, max_n, exec);
  const MaxScan best =
      max_value_scan(table, instance.player_count(), exec);
  return {Coalition::from_mask(instance.player_count(), best.argmax),
          best.value};
}

GameTable size_excess_game(int players, int threshold) {
  const std::size_t size = std::size_t{1} << players;
  std::vector<Rational> values(size);
  for (std::size_t m = 0; m < size; ++m) {
    const int excess = std::popcount(static_cast<Mask>(m)) - threshold;
    values[m] = excess > 0 ? excess : 0;
  }
  return GameTable(players, std::move(values));
}

}  // namespace rps
