#ifndef RPS_PAYMENT_HPP
#define RPS_PAYMENT_HPP

#include <cstddef>
#include <vector>

#include "rps/coalition.hpp"
#include "rps/rational.hpp"

namespace rps {

/// One exact rational payment per player.
class PaymentVector {
 public:
  PaymentVector() = default;
  explicit PaymentVector(std::size_t players) : pay_(players) {}
  explicit PaymentVector(std::vector<Rational> values)
      : pay_(std::move(values)) {}

  std::size_t size() const { return pay_.size(); }
  Rational& operator[](std::size_t i) { return pay_[i]; }
  const Rational& operator[](std::size_t i) const { return pay_[i]; }

  /// p(N): sum over all players.
  Rational total() const;
  /// p(S): sum over the coalition's members.
  Rational total(const Coalition& coalition) const;

  bool integral() const;

  auto begin() const { return pay_.begin(); }
  auto end() const { return pay_.end(); }

  bool operator==(const PaymentVector& other) const = default;

 private:
  std::vector<Rational> pay_;
};

}  // namespace rps

#endif  // RPS_PAYMENT_HPP
