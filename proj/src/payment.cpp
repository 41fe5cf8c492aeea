#include "rps/payment.hpp"

namespace rps {

Rational PaymentVector::total() const {
  Rational sum = 0;
  for (const Rational& q : pay_) sum += q;
  return sum;
}

Rational PaymentVector::total(const Coalition& coalition) const {
  Rational sum = 0;
  for (int p : coalition.members()) {
    sum += pay_[static_cast<std::size_t>(p) - 1];
  }
  return sum;
}

bool PaymentVector::integral() const {
  for (const Rational& q : pay_) {
    if (!is_integral(q)) return false;
  }
  return true;
}

}  // namespace rps
