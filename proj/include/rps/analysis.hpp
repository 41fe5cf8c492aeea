#ifndef RPS_ANALYSIS_HPP
#define RPS_ANALYSIS_HPP

#include <cstdint>

#include "rps/enumeration.hpp"
#include "rps/game_table.hpp"
#include "rps/instance.hpp"

namespace rps {

/// Outcome of an exhaustive pairwise table check; when ok is false the two
/// coalitions witness the violation.
struct ConvexityCheck {
  bool ok = true;
  Coalition s;
  Coalition t;
};

/// Supermodularity: v(S) + v(T) <= v(S u T) + v(S n T) for every pair.
/// Returns the first violating pair (S-major, T-minor mask order).
/// Errors: TooLarge.
ConvexityCheck is_convex(const GameTable& table, int max_n = kDefaultEnumLimit,
                         Exec exec = Exec::Parallel);

/// v(S u T) >= v(S) + v(T) for every disjoint pair. Errors: TooLarge.
ConvexityCheck is_superadditive(const GameTable& table,
                                int max_n = kDefaultEnumLimit,
                                Exec exec = Exec::Parallel);

/// Realizes a convex three-player game as a reward/penalty instance whose
/// characteristic function reproduces the table on all 8 coalitions.
///
/// Singleton values are first split off as singleton reward/penalty sets;
/// the zero-singleton residual is then covered by (possibly) a full-set
/// penalty of weight d = min pair value, singleton rewards of weight d,
/// pair rewards of weight v(pair) - d, and a full-set reward absorbing the
/// remainder. Zero-weight sets are dropped. Convexity guarantees every
/// weight is non-negative.
///
/// Errors: NotThreePlayers, NotConvex, IntegralityRequired (a derived
/// weight is not an integer), NegativeResidual (the full-set reward came
/// out negative; impossible for convex input and kept as a fatal
/// consistency guard).
RpsInstance embed_three_player(const GameTable& table);

/// Strict variant requiring all singleton values to already be zero;
/// Error(NonZeroSingletons) otherwise.
RpsInstance embed_three_player_zero_singletons(const GameTable& table);

/// Exhaustive maximizer of v over all coalitions.
struct RpspSolution {
  Coalition selection;
  std::int64_t value = 0;
};

/// Brute-force optimum of the selection problem: the coalition maximizing
/// covered rewards minus hit penalties. Ties break toward the
/// lexicographically least coalition. Errors: TooLarge.
RpspSolution rpsp_solve(const RpsInstance& instance,
                        int max_n = kDefaultEnumLimit,
                        Exec exec = Exec::Parallel);

/// Symmetric game v(S) = max(0, |S| - threshold). The four-player,
/// threshold-2 case is convex but lies outside the reach of any
/// reward/penalty instance, which makes it a useful test fixture.
GameTable size_excess_game(int players, int threshold);

}  // namespace rps

#endif  // RPS_ANALYSIS_HPP
