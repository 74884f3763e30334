#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace vclines {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps the value reduced with a positive
// denominator, so structural equality is value equality.
using Rational = boost::multiprecision::cpp_rational;

// num/den with the sign moved into the numerator. The cpp_rational two-arg
// constructor rejects negative denominators outright, so every computed
// quotient must go through here. Throws std::invalid_argument when den == 0.
Rational make_rational(BigInt num, BigInt den);

// Parses "p" or "p/q" with optional leading '-'. Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& r);

std::size_t hash_value_bigint(const BigInt& v);

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace vclines
