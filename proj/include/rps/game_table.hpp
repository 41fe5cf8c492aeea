#ifndef RPS_GAME_TABLE_HPP
#define RPS_GAME_TABLE_HPP

#include <cstdint>
#include <vector>

#include "rps/coalition.hpp"
#include "rps/enumeration.hpp"
#include "rps/instance.hpp"
#include "rps/rational.hpp"

namespace rps {

/// Explicit characteristic function: one exact rational value per
/// coalition, indexed by mask. The empty coalition is pinned to 0.
class GameTable {
 public:
  /// values_by_mask must have exactly 2^players entries with
  /// values_by_mask[0] == 0; otherwise Error(InvalidTable).
  GameTable(int players, std::vector<Rational> values_by_mask);

  int player_count() const { return n_; }
  std::size_t coalition_count() const { return values_.size(); }
  const Rational& value(Mask mask) const { return values_[mask]; }
  const Rational& value(const Coalition& coalition) const {
    return values_[coalition.mask()];
  }
  const std::vector<Rational>& values() const { return values_; }

  bool integral() const;

 private:
  int n_ = 0;
  std::vector<Rational> values_;
};

/// Materializes v on all 2^n coalitions. Errors: TooLarge past max_n.
GameTable game_table(const RpsInstance& instance,
                     int max_n = kDefaultEnumLimit,
                     Exec exec = Exec::Parallel);

}  // namespace rps

#endif  // RPS_GAME_TABLE_HPP
