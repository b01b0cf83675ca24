#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pricing {

// All arithmetic in this library is exact. Values, probabilities, prices and
// revenues are arbitrary-precision rationals; no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_num(const Rational& r) { return numerator(r); }
inline Integer rational_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Precondition: is_integer(r).
inline Integer to_integer(const Rational& r) { return numerator(r); }

inline Integer int_pow(const Integer& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

// Parses "p" or "p/q" with q > 0. Non-canonical inputs are normalized.
Rational parse_rational(const std::string& text);

// Lowest-terms form, "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

}  // namespace pricing
