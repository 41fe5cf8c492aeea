#include "rps/instance.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "rps/error.hpp"

namespace rps {

namespace {

WeightedSet check_set(const RawSet& raw, int n, const char* family,
                      std::size_t index) {
  const std::string where =
      std::string(family) + " set #" + std::to_string(index + 1);
  if (raw.members.empty()) {
    fail(ErrorKind::EmptySet, where + " has no members");
  }
  WeightedSet out;
  out.members = raw.members;
  std::sort(out.members.begin(), out.members.end());
  for (std::size_t i = 0; i < out.members.size(); ++i) {
    const int p = out.members[i];
    if (p < 1 || p > n) {
      fail(ErrorKind::OutOfRange,
           where + " contains player " + std::to_string(p));
    }
    if (i > 0 && out.members[i - 1] == p) {
      fail(ErrorKind::DuplicateMember,
           where + " lists player " + std::to_string(p) + " twice");
    }
  }
  if (raw.value < 1) {
    fail(ErrorKind::NonPositiveWeight,
         where + " has weight " + std::to_string(raw.value));
  }
  out.weight = raw.value;
  return out;
}

}  // namespace

RpsInstance RpsInstance::validate(const RawInstance& raw) {
  if (raw.players < 1) {
    fail(ErrorKind::BadPlayerCount,
         "player count " + std::to_string(raw.players));
  }
  if (raw.players > std::numeric_limits<int>::max()) {
    fail(ErrorKind::BadPlayerCount,
         "player count " + std::to_string(raw.players) + " is not supported");
  }
  RpsInstance inst;
  inst.n_ = static_cast<int>(raw.players);

  unsigned __int128 mass = 0;
  for (std::size_t i = 0; i < raw.rewards.size(); ++i) {
    inst.rewards_.push_back(check_set(raw.rewards[i], inst.n_, "reward", i));
    mass += static_cast<unsigned __int128>(inst.rewards_.back().weight);
  }
  for (std::size_t j = 0; j < raw.penalties.size(); ++j) {
    inst.penalties_.push_back(
        check_set(raw.penalties[j], inst.n_, "penalty", j));
    mass += static_cast<unsigned __int128>(inst.penalties_.back().weight);
  }
  // The flow construction needs H = sum(a) + sum(b) as an exact int64.
  if (mass > static_cast<unsigned __int128>(
                 std::numeric_limits<std::int64_t>::max())) {
    fail(ErrorKind::Overflow, "total weight mass exceeds the 64-bit range");
  }
  for (const WeightedSet& set : inst.rewards_) inst.reward_total_ += set.weight;
  for (const WeightedSet& set : inst.penalties_) {
    inst.penalty_total_ += set.weight;
  }
  return inst;
}

std::int64_t RpsInstance::char_value(const Coalition& coalition) const {
  std::int64_t value = 0;
  for (const WeightedSet& reward : rewards_) {
    bool covered = true;
    for (int p : reward.members) {
      if (!coalition.contains(p)) {
        covered = false;
        break;
      }
    }
    if (covered) value += reward.weight;
  }
  for (const WeightedSet& penalty : penalties_) {
    for (int p : penalty.members) {
      if (coalition.contains(p)) {
        value -= penalty.weight;
        break;
      }
    }
  }
  return value;
}

std::int64_t RpsInstance::grand_value() const {
  return reward_total_ - penalty_total_;
}

bool RpsInstance::singleton_sets_only() const {
  for (const WeightedSet& set : rewards_) {
    if (set.members.size() != 1) return false;
  }
  for (const WeightedSet& set : penalties_) {
    if (set.members.size() != 1) return false;
  }
  return true;
}

RpsInstance make_instance(int players, std::vector<RawSet> rewards,
                          std::vector<RawSet> penalties) {
  RawInstance raw;
  raw.players = players;
  raw.rewards = std::move(rewards);
  raw.penalties = std::move(penalties);
  return RpsInstance::validate(raw);
}

Coalition Subgame::restrict(const Coalition& original) const {
  Coalition out(instance.player_count());
  for (std::size_t i = 0; i < original_player.size(); ++i) {
    if (original.contains(original_player[i])) {
      out.add(static_cast<int>(i) + 1);
    }
  }
  if (out.size() != original.size()) {
    fail(ErrorKind::OutOfRange,
         "coalition {" + original.to_string() +
             "} is not contained in the restricted player set");
  }
  return out;
}

Subgame subgame(const RpsInstance& instance, const Coalition& coalition) {
  if (coalition.empty()) {
    fail(ErrorKind::EmptyCoalition, "cannot restrict to the empty coalition");
  }
  const std::vector<int> kept = coalition.members();
  std::vector<int> new_label(
      static_cast<std::size_t>(instance.player_count()) + 1, 0);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    new_label[static_cast<std::size_t>(kept[i])] = static_cast<int>(i) + 1;
  }

  RawInstance raw;
  raw.players = static_cast<std::int64_t>(kept.size());
  for (const WeightedSet& reward : instance.rewards()) {
    bool inside = true;
    for (int p : reward.members) {
      if (!coalition.contains(p)) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    RawSet set;
    for (int p : reward.members) set.members.push_back(new_label[p]);
    set.value = reward.weight;
    raw.rewards.push_back(std::move(set));
  }
  for (const WeightedSet& penalty : instance.penalties()) {
    RawSet set;
    for (int p : penalty.members) {
      if (coalition.contains(p)) set.members.push_back(new_label[p]);
    }
    if (set.members.empty()) continue;
    set.value = penalty.weight;
    raw.penalties.push_back(std::move(set));
  }

  Subgame out{RpsInstance::validate(raw), kept};
  return out;
}

}  // namespace rps
