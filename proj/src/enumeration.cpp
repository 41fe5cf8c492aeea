#include "rps/enumeration.hpp"

#include <bit>
#include <limits>
#include <string>

#include "rps/error.hpp"

namespace rps {

namespace {

void check_enumerable(int players, int max_n, const char* what) {
  if (players > max_n || players > kMaxMaskPlayers) {
    fail(ErrorKind::TooLarge,
         std::string(what) + " would enumerate 2^" + std::to_string(players) +
             " coalitions (limit " +
             std::to_string(std::min(max_n, kMaxMaskPlayers)) + ")");
  }
}

BigInt to_big(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u =
      negative ? ~static_cast<unsigned __int128>(v) + 1
               : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return negative ? -out : out;
}

// (S-major, T-minor) scan position of a coalition pair.
std::uint64_t pair_key(Mask s, Mask t) {
  return (static_cast<std::uint64_t>(s) << 32) | t;
}

}  // namespace

std::vector<std::int64_t> dense_char_table(const RpsInstance& instance,
                                           int max_n, Exec exec) {
  const int n = instance.player_count();
  check_enumerable(n, max_n, "characteristic table");

  std::vector<Mask> reward_masks, penalty_masks;
  std::vector<std::int64_t> reward_weights, penalty_weights;
  for (const WeightedSet& set : instance.rewards()) {
    Mask m = 0;
    for (int p : set.members) m |= Mask{1} << (p - 1);
    reward_masks.push_back(m);
    reward_weights.push_back(set.weight);
  }
  for (const WeightedSet& set : instance.penalties()) {
    Mask m = 0;
    for (int p : set.members) m |= Mask{1} << (p - 1);
    penalty_masks.push_back(m);
    penalty_weights.push_back(set.weight);
  }

  const std::int64_t size = std::int64_t{1} << n;
  std::vector<std::int64_t> table(static_cast<std::size_t>(size));
  const auto eval = [&](Mask coalition) {
    std::int64_t value = 0;
    for (std::size_t i = 0; i < reward_masks.size(); ++i) {
      if ((reward_masks[i] & coalition) == reward_masks[i]) {
        value += reward_weights[i];
      }
    }
    for (std::size_t j = 0; j < penalty_masks.size(); ++j) {
      if ((penalty_masks[j] & coalition) != 0) value -= penalty_weights[j];
    }
    return value;
  };

  if (exec == Exec::Serial) {
    for (std::int64_t m = 0; m < size; ++m) {
      table[static_cast<std::size_t>(m)] = eval(static_cast<Mask>(m));
    }
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t m = 0; m < size; ++m) {
      table[static_cast<std::size_t>(m)] = eval(static_cast<Mask>(m));
    }
  }
  return table;
}

std::vector<BigInt> marginal_sums_by_size(
    const std::vector<std::int64_t>& table, int players, Exec exec) {
  const int n = players;
  const std::int64_t size = std::int64_t{1} << n;
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<__int128> acc(cells, 0);

  if (exec == Exec::Serial) {
    for (std::int64_t m = 0; m < size; ++m) {
      const int below = std::popcount(static_cast<Mask>(m));
      for (int k = 0; k < n; ++k) {
        if ((m >> k) & 1) continue;
        const std::int64_t with = m | (std::int64_t{1} << k);
        acc[static_cast<std::size_t>(k) * n + below] +=
            static_cast<__int128>(table[static_cast<std::size_t>(with)]) -
            table[static_cast<std::size_t>(m)];
      }
    }
  } else {
#pragma omp parallel
    {
      std::vector<__int128> local(cells, 0);
#pragma omp for schedule(static) nowait
      for (std::int64_t m = 0; m < size; ++m) {
        const int below = std::popcount(static_cast<Mask>(m));
        for (int k = 0; k < n; ++k) {
          if ((m >> k) & 1) continue;
          const std::int64_t with = m | (std::int64_t{1} << k);
          local[static_cast<std::size_t>(k) * n + below] +=
              static_cast<__int128>(table[static_cast<std::size_t>(with)]) -
              table[static_cast<std::size_t>(m)];
        }
      }
#pragma omp critical
      {
        for (std::size_t i = 0; i < cells; ++i) acc[i] += local[i];
      }
    }
  }

  std::vector<BigInt> out(cells);
  for (std::size_t i = 0; i < cells; ++i) out[i] = to_big(acc[i]);
  return out;
}

std::vector<Rational> marginal_sums_by_size(const std::vector<Rational>& table,
                                            int players, Exec exec) {
  const int n = players;
  const std::int64_t size = std::int64_t{1} << n;
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<Rational> acc(cells);

  if (exec == Exec::Serial) {
    for (std::int64_t m = 0; m < size; ++m) {
      const int below = std::popcount(static_cast<Mask>(m));
      for (int k = 0; k < n; ++k) {
        if ((m >> k) & 1) continue;
        const std::int64_t with = m | (std::int64_t{1} << k);
        acc[static_cast<std::size_t>(k) * n + below] +=
            table[static_cast<std::size_t>(with)] -
            table[static_cast<std::size_t>(m)];
      }
    }
  } else {
#pragma omp parallel
    {
      std::vector<Rational> local(cells);
#pragma omp for schedule(static) nowait
      for (std::int64_t m = 0; m < size; ++m) {
        const int below = std::popcount(static_cast<Mask>(m));
        for (int k = 0; k < n; ++k) {
          if ((m >> k) & 1) continue;
          const std::int64_t with = m | (std::int64_t{1} << k);
          local[static_cast<std::size_t>(k) * n + below] +=
              table[static_cast<std::size_t>(with)] -
              table[static_cast<std::size_t>(m)];
        }
      }
#pragma omp critical
      {
        for (std::size_t i = 0; i < cells; ++i) acc[i] += local[i];
      }
    }
  }
  return acc;
}

template <class Value>
PairScan convexity_scan(const std::vector<Value>& table, int players,
                        Exec exec) {
  const std::int64_t size = std::int64_t{1} << players;
  const auto violates = [&](Mask s, Mask t) {
    return table[s] + table[t] > table[s | t] + table[s & t];
  };

  if (exec == Exec::Serial) {
    for (std::int64_t s = 0; s < size; ++s) {
      for (std::int64_t t = 0; t < size; ++t) {
        if (violates(static_cast<Mask>(s), static_cast<Mask>(t))) {
          return {true, static_cast<Mask>(s), static_cast<Mask>(t)};
        }
      }
    }
    return {};
  }

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel
  {
    std::uint64_t local = std::numeric_limits<std::uint64_t>::max();
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 0; s < size; ++s) {
      for (std::int64_t t = 0; t < size; ++t) {
        if (violates(static_cast<Mask>(s), static_cast<Mask>(t))) {
          const std::uint64_t key =
              pair_key(static_cast<Mask>(s), static_cast<Mask>(t));
          if (key < local) local = key;
          break;  // later T in this row cannot beat the found key
        }
      }
    }
#pragma omp critical
    {
      if (local < best) best = local;
    }
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return {};
  return {true, static_cast<Mask>(best >> 32),
          static_cast<Mask>(best & 0xffffffffu)};
}

template <class Value>
PairScan superadditivity_scan(const std::vector<Value>& table, int players,
                              Exec exec) {
  const std::int64_t size = std::int64_t{1} << players;
  const auto violates = [&](Mask s, Mask t) {
    return (s & t) == 0 && table[s | t] < table[s] + table[t];
  };

  if (exec == Exec::Serial) {
    for (std::int64_t s = 0; s < size; ++s) {
      for (std::int64_t t = 0; t < size; ++t) {
        if (violates(static_cast<Mask>(s), static_cast<Mask>(t))) {
          return {true, static_cast<Mask>(s), static_cast<Mask>(t)};
        }
      }
    }
    return {};
  }

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel
  {
    std::uint64_t local = std::numeric_limits<std::uint64_t>::max();
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 0; s < size; ++s) {
      for (std::int64_t t = 0; t < size; ++t) {
        if (violates(static_cast<Mask>(s), static_cast<Mask>(t))) {
          const std::uint64_t key =
              pair_key(static_cast<Mask>(s), static_cast<Mask>(t));
          if (key < local) local = key;
          break;
        }
      }
    }
#pragma omp critical
    {
      if (local < best) best = local;
    }
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return {};
  return {true, static_cast<Mask>(best >> 32),
          static_cast<Mask>(best & 0xffffffffu)};
}

template PairScan convexity_scan<std::int64_t>(
    const std::vector<std::int64_t>&, int, Exec);
template PairScan convexity_scan<Rational>(const std::vector<Rational>&, int,
                                           Exec);
template PairScan superadditivity_scan<std::int64_t>(
    const std::vector<std::int64_t>&, int, Exec);
template PairScan superadditivity_scan<Rational>(const std::vector<Rational>&,
                                                 int, Exec);

GapScan rationality_scan(const std::vector<std::int64_t>& table,
                         const PaymentVector& payments, int players,
                         Exec exec) {
  const std::int64_t size = std::int64_t{1} << players;
  // p(S) for every coalition, built by peeling the lowest member.
  std::vector<Rational> coalition_pay(static_cast<std::size_t>(size));
  for (std::int64_t m = 1; m < size; ++m) {
    const int low = std::countr_zero(static_cast<Mask>(m));
    coalition_pay[static_cast<std::size_t>(m)] =
        coalition_pay[static_cast<std::size_t>(m & (m - 1))] +
        payments[static_cast<std::size_t>(low)];
  }

  const auto violates = [&](std::int64_t m) {
    return coalition_pay[static_cast<std::size_t>(m)] <
           table[static_cast<std::size_t>(m)];
  };

  bool found = false;
  Mask witness = 0;
  if (exec == Exec::Serial) {
    for (std::int64_t m = 0; m < size; ++m) {
      if (violates(m)) {
        const Mask candidate = static_cast<Mask>(m);
        if (!found || lex_mask_less(candidate, witness)) {
          found = true;
          witness = candidate;
        }
      }
    }
  } else {
#pragma omp parallel
    {
      bool local_found = false;
      Mask local_witness = 0;
#pragma omp for schedule(static) nowait
      for (std::int64_t m = 0; m < size; ++m) {
        if (violates(m)) {
          const Mask candidate = static_cast<Mask>(m);
          if (!local_found || lex_mask_less(candidate, local_witness)) {
            local_found = true;
            local_witness = candidate;
          }
        }
      }
#pragma omp critical
      {
        if (local_found &&
            (!found || lex_mask_less(local_witness, witness))) {
          found = true;
          witness = local_witness;
        }
      }
    }
  }
  return {found, witness};
}

MaxScan max_value_scan(const std::vector<std::int64_t>& table, int players,
                       Exec exec) {
  const std::int64_t size = std::int64_t{1} << players;
  const auto better = [&](std::int64_t value, Mask mask, const MaxScan& best) {
    return value > best.value ||
           (value == best.value && lex_mask_less(mask, best.argmax));
  };

  MaxScan best{table[0], 0};
  if (exec == Exec::Serial) {
    for (std::int64_t m = 1; m < size; ++m) {
      const std::int64_t value = table[static_cast<std::size_t>(m)];
      if (better(value, static_cast<Mask>(m), best)) {
        best = {value, static_cast<Mask>(m)};
      }
    }
    return best;
  }

#pragma omp parallel
  {
    MaxScan local{table[0], 0};
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 1; m < size; ++m) {
      const std::int64_t value = table[static_cast<std::size_t>(m)];
      if (better(value, static_cast<Mask>(m), local)) {
        local = {value, static_cast<Mask>(m)};
      }
    }
#pragma omp critical
    {
      if (better(local.value, local.argmax, best)) best = local;
    }
  }
  return best;
}

}  // namespace rps
