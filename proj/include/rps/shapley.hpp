#ifndef RPS_SHAPLEY_HPP
#define RPS_SHAPLEY_HPP

#include "rps/enumeration.hpp"
#include "rps/game_table.hpp"
#include "rps/instance.hpp"
#include "rps/payment.hpp"

namespace rps {

/// Shapley value of an RPS game in closed form: player k receives
/// a_i/|A_i| for every reward set containing k and pays b_j/|B_j| for
/// every penalty set containing k. Linear in total set membership.
PaymentVector shapley_closed_form(const RpsInstance& instance);

/// Shapley value by exhaustive subset enumeration,
/// phi(k) = sum over S without k of |S|!(n-|S|-1)!/n! (v(S u {k}) - v(S)),
/// evaluated with exact arithmetic. Cross-validates the closed form.
/// Errors: TooLarge.
PaymentVector shapley_oracle(const RpsInstance& instance,
                             int max_n = kDefaultEnumLimit,
                             Exec exec = Exec::Parallel);

/// Same subset-weighted evaluation for an arbitrary game table.
PaymentVector shapley_table_oracle(const GameTable& table,
                                   int max_n = kDefaultEnumLimit,
                                   Exec exec = Exec::Parallel);

}  // namespace rps

#endif  // RPS_SHAPLEY_HPP
