#ifndef RPS_RATIONAL_HPP
#define RPS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace rps {

// All money amounts are exact rationals; weights and flows are exact
// integers. Floating point never enters any computation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_integral(const Rational& q);

/// Renders "num/den", or just "num" when the denominator is 1.
std::string ratio_string(const Rational& q);

/// Parses "num/den" or "num" with optional leading minus. Throws
/// Error(ParseError) on anything else (including a zero denominator).
Rational parse_ratio(std::string_view text);

/// Least common multiple of all denominators; 1 for an empty list.
BigInt common_denominator(const std::vector<Rational>& values);

}  // namespace rps

#endif  // RPS_RATIONAL_HPP
