#include "rps/shapley.hpp"

#include <string>

#include "rps/error.hpp"

namespace rps {

PaymentVector shapley_closed_form(const RpsInstance& instance) {
  PaymentVector out(static_cast<std::size_t>(instance.player_count()));
  for (const WeightedSet& reward : instance.rewards()) {
    const Rational share(reward.weight,
                         static_cast<std::int64_t>(reward.members.size()));
    for (int p : reward.members) out[static_cast<std::size_t>(p) - 1] += share;
  }
  for (const WeightedSet& penalty : instance.penalties()) {
    const Rational share(penalty.weight,
                         static_cast<std::int64_t>(penalty.members.size()));
    for (int p : penalty.members) {
      out[static_cast<std::size_t>(p) - 1] -= share;
    }
  }
  return out;
}

namespace {

template <class Sum>
PaymentVector weigh_marginals(const std::vector<Sum>& sums, int n) {
  // phi(k) = sum over sizes s of s!(n-s-1)!/n! * (marginal sum at size s)
  std::vector<BigInt> factorial(static_cast<std::size_t>(n) + 1);
  factorial[0] = 1;
  for (int i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;

  PaymentVector out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Rational phi = 0;
    for (int s = 0; s < n; ++s) {
      const Sum& marginal = sums[static_cast<std::size_t>(k) * n + s];
      if (marginal == 0) continue;
      phi += Rational(factorial[s] * factorial[n - s - 1], factorial[n]) *
             Rational(marginal);
    }
    out[static_cast<std::size_t>(k)] = phi;
  }
  return out;
}

}  // namespace

PaymentVector shapley_oracle(const RpsInstance& instance, int max_n,
                             Exec exec) {
  const int n = instance.player_count();
  const std::vector<std::int64_t> table =
      dense_char_table(instance, max_n, exec);
  return weigh_marginals(marginal_sums_by_size(table, n, exec), n);
}

PaymentVector shapley_table_oracle(const GameTable& table, int max_n,
                                   Exec exec) {
  const int n = table.player_count();
  if (n > max_n) {
    fail(ErrorKind::TooLarge, "Shapley enumeration over 2^" +
                                  std::to_string(n) +
                                  " coalitions (limit " +
                                  std::to_string(max_n) + ")");
  }
  return weigh_marginals(marginal_sums_by_size(table.values(), n, exec), n);
}

}  // namespace rps
