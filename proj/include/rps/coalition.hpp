#ifndef RPS_COALITION_HPP
#define RPS_COALITION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rps {

// Coalitions of at most kMaxMaskPlayers players can be packed into a Mask
// for exhaustive enumeration: bit j set means player j+1 is in the set.
using Mask = std::uint32_t;
inline constexpr int kMaxMaskPlayers = 30;

// Default guard for every operation that enumerates 2^n coalitions.
inline constexpr int kDefaultEnumLimit = 20;

/// Member-sequence lexicographic order on coalitions encoded as masks:
/// {} < {1} < {1,2} < {1,3} < {2}. Used for deterministic tie-breaking.
bool lex_mask_less(Mask a, Mask b);

/// A set of players over a fixed universe {1,...,n}. Player indices are
/// 1-based in every public signature (matching the file format and CLI);
/// storage is a 0-based bitset.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(int universe_size);
  static Coalition full(int universe_size);
  static Coalition of(int universe_size, const std::vector<int>& members);
  static Coalition from_mask(int universe_size, Mask mask);
  /// Parses "1,2,5" (or "" for the empty coalition).
  static Coalition parse(int universe_size, std::string_view text);

  int universe_size() const { return n_; }
  int size() const;
  bool empty() const;

  bool contains(int player) const;
  void add(int player);
  void remove(int player);

  bool subset_of(const Coalition& other) const;
  bool intersects(const Coalition& other) const;
  Coalition union_with(const Coalition& other) const;
  Coalition intersect_with(const Coalition& other) const;
  Coalition complement() const;

  /// Sorted 1-based member list.
  std::vector<int> members() const;
  /// Mask encoding; requires universe_size() <= kMaxMaskPlayers.
  Mask mask() const;
  /// "1,2,5"; empty string for the empty coalition.
  std::string to_string() const;

  static bool lex_less(const Coalition& a, const Coalition& b);

  bool operator==(const Coalition& other) const = default;

 private:
  void check_player(int player) const;

  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace rps

#endif  // RPS_COALITION_HPP
