#ifndef RPS_INSTANCE_HPP
#define RPS_INSTANCE_HPP

#include <cstdint>
#include <vector>

#include "rps/coalition.hpp"

namespace rps {

/// Unchecked set description: 1-based members in any order plus a weight.
struct RawSet {
  std::vector<int> members;
  std::int64_t value = 0;
};

/// Unchecked instance description as parsed from a file or built in code.
struct RawInstance {
  std::int64_t players = 0;
  std::vector<RawSet> rewards;
  std::vector<RawSet> penalties;
};

/// A validated reward or penalty set. Members are sorted and 1-based.
struct WeightedSet {
  std::vector<int> members;
  std::int64_t weight = 0;
};

/// A reward-penalty-selection instance over players {1,...,n}: a family of
/// weighted reward sets (paid out when fully selected) and weighted penalty
/// sets (charged as soon as one member is selected). The induced game value
/// of a coalition S is
///
///   v(S) = sum of weights of reward sets contained in S
///        - sum of weights of penalty sets intersecting S.
///
/// Instances are immutable after validation and safe to share across
/// threads.
class RpsInstance {
 public:
  /// Checks a raw description and builds the instance.
  ///
  /// Errors: BadPlayerCount (n < 1), EmptySet, OutOfRange, DuplicateMember
  /// (a set lists the same player twice), NonPositiveWeight, Overflow (the
  /// total weight mass would not fit a signed 64-bit integer, which the
  /// flow construction requires).
  static RpsInstance validate(const RawInstance& raw);

  int player_count() const { return n_; }
  const std::vector<WeightedSet>& rewards() const { return rewards_; }
  const std::vector<WeightedSet>& penalties() const { return penalties_; }
  std::int64_t reward_total() const { return reward_total_; }
  std::int64_t penalty_total() const { return penalty_total_; }

  /// v(S). The empty coalition always evaluates to 0: it covers no
  /// non-empty reward set and touches no non-empty penalty set.
  std::int64_t char_value(const Coalition& coalition) const;
  /// v(N) = total rewards minus total penalties.
  std::int64_t grand_value() const;
  Coalition full_coalition() const { return Coalition::full(n_); }

  /// True when every reward and penalty set has exactly one member.
  bool singleton_sets_only() const;

 private:
  RpsInstance() = default;

  int n_ = 0;
  std::vector<WeightedSet> rewards_;
  std::vector<WeightedSet> penalties_;
  std::int64_t reward_total_ = 0;
  std::int64_t penalty_total_ = 0;
};

/// Shorthand used by tests and generators; forwards to validate().
RpsInstance make_instance(int players, std::vector<RawSet> rewards,
                          std::vector<RawSet> penalties);

/// Restriction of an instance to a coalition. Players are renumbered
/// 1..|S| preserving order; original_player maps new index -> original
/// 1-based label.
struct Subgame {
  RpsInstance instance;
  std::vector<int> original_player;

  /// Translates a coalition given in original labels (must be a subset of
  /// the restricted player set) into subgame labels.
  Coalition restrict(const Coalition& original) const;
};

/// Keeps reward sets fully inside the coalition unchanged and replaces each
/// penalty set by its (non-empty) intersection with the coalition; the
/// restricted game's characteristic function agrees with the original on
/// every sub-coalition. Errors: EmptyCoalition.
Subgame subgame(const RpsInstance& instance, const Coalition& coalition);

}  // namespace rps

#endif  // RPS_INSTANCE_HPP
