#include "rps/rational.hpp"

#include <cctype>

#include "rps/error.hpp"

namespace rps {

bool is_integral(const Rational& q) { return denominator(q) == 1; }

std::string ratio_string(const Rational& q) {
  std::string out = numerator(q).str();
  if (denominator(q) != 1) {
    out += "/";
    out += denominator(q).str();
  }
  return out;
}

namespace {

BigInt parse_big_int(std::string_view text) {
  if (text.empty()) fail(ErrorKind::ParseError, "empty integer");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) fail(ErrorKind::ParseError, "sign without digits");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      fail(ErrorKind::ParseError,
           "invalid integer '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

}  // namespace

Rational parse_ratio(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_big_int(text));
  }
  BigInt num = parse_big_int(text.substr(0, slash));
  BigInt den = parse_big_int(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator");
  return Rational(num, den);
}

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt acc = 1;
  for (const Rational& q : values) acc = lcm(acc, denominator(q));
  return acc;
}

}  // namespace rps
