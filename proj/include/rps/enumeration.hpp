#ifndef RPS_ENUMERATION_HPP
#define RPS_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "rps/coalition.hpp"
#include "rps/instance.hpp"
#include "rps/payment.hpp"
#include "rps/rational.hpp"

namespace rps {

/// Every exhaustive scan below exists twice: a plain serial loop (the
/// reference implementation) and an OpenMP kernel. Both produce identical
/// results for identical inputs: the parallel reductions only ever combine
/// through commutative, associative operations (exact integer/rational
/// sums, min over a total order), so the outcome is independent of thread
/// count and schedule. Exec::Parallel is the default everywhere.
enum class Exec { Serial, Parallel };

/// v(S) for all 2^n coalitions, indexed by mask (bit j = player j+1).
/// Errors: TooLarge when n exceeds max_n or the mask width.
std::vector<std::int64_t> dense_char_table(const RpsInstance& instance,
                                           int max_n = kDefaultEnumLimit,
                                           Exec exec = Exec::Parallel);

/// Marginal-contribution sums grouped by coalition size:
/// result[k*n + s] = sum over S with k+1 not in S and |S| = s of
/// (v(S u {k+1}) - v(S)). Feeding these through the size weights
/// s!(n-s-1)!/n! yields the Shapley value.
std::vector<BigInt> marginal_sums_by_size(
    const std::vector<std::int64_t>& table, int players, Exec exec);
std::vector<Rational> marginal_sums_by_size(const std::vector<Rational>& table,
                                            int players, Exec exec);

struct PairScan {
  bool found = false;
  Mask s = 0;
  Mask t = 0;
};

/// First pair (S-major, T-minor mask order) violating
/// v(S) + v(T) <= v(S u T) + v(S n T).
template <class Value>
PairScan convexity_scan(const std::vector<Value>& table, int players,
                        Exec exec);

/// First disjoint pair violating v(S u T) >= v(S) + v(T).
template <class Value>
PairScan superadditivity_scan(const std::vector<Value>& table, int players,
                              Exec exec);

struct GapScan {
  bool found = false;
  Mask witness = 0;
};

/// Lexicographically least coalition S with p(S) < v(S), if any.
GapScan rationality_scan(const std::vector<std::int64_t>& table,
                         const PaymentVector& payments, int players,
                         Exec exec);

struct MaxScan {
  std::int64_t value = 0;
  Mask argmax = 0;
};

/// Maximum of v over all coalitions; ties break toward the
/// lexicographically least coalition.
MaxScan max_value_scan(const std::vector<std::int64_t>& table, int players,
                       Exec exec);

}  // namespace rps

#endif  // RPS_ENUMERATION_HPP
