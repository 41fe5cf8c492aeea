#include "rps/game_table.hpp"

#include <string>

#include "rps/error.hpp"

namespace rps {

GameTable::GameTable(int players, std::vector<Rational> values_by_mask)
    : n_(players), values_(std::move(values_by_mask)) {
  if (n_ < 1 || n_ > kMaxMaskPlayers) {
    fail(ErrorKind::InvalidTable,
         "unsupported player count " + std::to_string(n_));
  }
  if (values_.size() != (std::size_t{1} << n_)) {
    fail(ErrorKind::InvalidTable,
         "expected " + std::to_string(std::size_t{1} << n_) +
             " coalition values, got " + std::to_string(values_.size()));
  }
  if (values_[0] != 0) {
    fail(ErrorKind::InvalidTable, "the empty coalition must have value 0");
  }
}

bool GameTable::integral() const {
  for (const Rational& q : values_) {
    if (!is_integral(q)) return false;
  }
  return true;
}

GameTable game_table(const RpsInstance& instance, int max_n, Exec exec) {
  const std::vector<std::int64_t> dense =
      dense_char_table(instance, max_n, exec);
  std::vector<Rational> values(dense.size());
  for (std::size_t m = 0; m < dense.size(); ++m) values[m] = dense[m];
  return GameTable(instance.player_count(), std::move(values));
}

}  // namespace rps
