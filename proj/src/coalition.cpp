#include "rps/coalition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rps/error.hpp"

namespace rps {

bool lex_mask_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  // A proper prefix precedes its extensions; the empty set precedes all.
  return a == 0 && b != 0;
}

Coalition::Coalition(int universe_size) : n_(universe_size) {
  if (universe_size < 0) {
    throw std::invalid_argument("negative universe size");
  }
  bits_.assign((static_cast<std::size_t>(n_) + 63) / 64, 0);
}

Coalition Coalition::full(int universe_size) {
  Coalition c(universe_size);
  for (int p = 1; p <= universe_size; ++p) c.add(p);
  return c;
}

Coalition Coalition::of(int universe_size, const std::vector<int>& members) {
  Coalition c(universe_size);
  for (int p : members) c.add(p);
  return c;
}

Coalition Coalition::from_mask(int universe_size, Mask mask) {
  Coalition c(universe_size);
  while (mask != 0) {
    c.add(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return c;
}

Coalition Coalition::parse(int universe_size, std::string_view text) {
  Coalition c(universe_size);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    if (item.empty()) fail(ErrorKind::ParseError, "empty coalition member");
    int value = 0;
    for (char ch : item) {
      if (ch < '0' || ch > '9') {
        fail(ErrorKind::ParseError,
             "invalid coalition member '" + std::string(item) + "'");
      }
      value = value * 10 + (ch - '0');
      if (value > universe_size) break;  // avoids int overflow on long input
    }
    if (c.contains(value)) {
      fail(ErrorKind::DuplicateMember,
           "player " + std::to_string(value) + " listed twice");
    }
    c.add(value);
    pos = comma + 1;
  }
  return c;
}

int Coalition::size() const {
  int count = 0;
  for (std::uint64_t block : bits_) count += std::popcount(block);
  return count;
}

bool Coalition::empty() const {
  for (std::uint64_t block : bits_) {
    if (block != 0) return false;
  }
  return true;
}

void Coalition::check_player(int player) const {
  if (player < 1 || player > n_) {
    fail(ErrorKind::OutOfRange, "player " + std::to_string(player) +
                                    " outside {1,...," + std::to_string(n_) +
                                    "}");
  }
}

bool Coalition::contains(int player) const {
  if (player < 1 || player > n_) return false;
  const int bit = player - 1;
  return (bits_[bit / 64] >> (bit % 64)) & 1u;
}

void Coalition::add(int player) {
  check_player(player);
  const int bit = player - 1;
  bits_[bit / 64] |= std::uint64_t{1} << (bit % 64);
}

void Coalition::remove(int player) {
  check_player(player);
  const int bit = player - 1;
  bits_[bit / 64] &= ~(std::uint64_t{1} << (bit % 64));
}

bool Coalition::subset_of(const Coalition& other) const {
  if (n_ != other.n_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if ((bits_[i] & ~other.bits_[i]) != 0) return false;
  }
  return true;
}

bool Coalition::intersects(const Coalition& other) const {
  if (n_ != other.n_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if ((bits_[i] & other.bits_[i]) != 0) return true;
  }
  return false;
}

Coalition Coalition::union_with(const Coalition& other) const {
  if (n_ != other.n_) throw std::invalid_argument("universe mismatch");
  Coalition out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] |= other.bits_[i];
  return out;
}

Coalition Coalition::intersect_with(const Coalition& other) const {
  if (n_ != other.n_) throw std::invalid_argument("universe mismatch");
  Coalition out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] &= other.bits_[i];
  return out;
}

Coalition Coalition::complement() const {
  Coalition out(n_);
  for (int p = 1; p <= n_; ++p) {
    if (!contains(p)) out.add(p);
  }
  return out;
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    std::uint64_t block = bits_[i];
    while (block != 0) {
      out.push_back(static_cast<int>(i * 64 + std::countr_zero(block)) + 1);
      block &= block - 1;
    }
  }
  return out;
}

Mask Coalition::mask() const {
  if (n_ > kMaxMaskPlayers) {
    fail(ErrorKind::TooLarge, "coalition universe of " + std::to_string(n_) +
                                  " players exceeds the mask width");
  }
  return bits_.empty() ? 0 : static_cast<Mask>(bits_[0]);
}

std::string Coalition::to_string() const {
  std::string out;
  for (int p : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

bool Coalition::lex_less(const Coalition& a, const Coalition& b) {
  const std::vector<int> ma = a.members();
  const std::vector<int> mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

}  // namespace rps
