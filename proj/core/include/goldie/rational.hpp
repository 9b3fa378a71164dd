#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace goldie {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// True iff a - b is an integer (the coordinates are Z-comparable).
inline bool z_comparable(const Rational& a, const Rational& b) {
  Rational d = a - b;
  return denominator(d) == 1;
}

/// a > b in the partial order: a - b is a positive integer.
inline bool z_greater(const Rational& a, const Rational& b) {
  Rational d = a - b;
  return denominator(d) == 1 && numerator(d) > 0;
}

/// a >= b in the partial order: a - b is a nonnegative integer.
inline bool z_geq(const Rational& a, const Rational& b) {
  Rational d = a - b;
  return denominator(d) == 1 && numerator(d) >= 0;
}

inline Integer rational_floor(const Rational& a) {
  Integer q = numerator(a) / denominator(a);
  if (numerator(a) < 0 && q * denominator(a) != numerator(a)) --q;
  return q;
}

/// Fractional part in [0, 1); the canonical coset representative mod Z.
inline Rational fractional_part(const Rational& a) {
  return a - Rational(rational_floor(a));
}

inline bool is_integer(const Rational& a) { return denominator(a) == 1; }

inline std::string to_string(const Rational& a) {
  if (denominator(a) == 1) return numerator(a).str();
  return numerator(a).str() + "/" + denominator(a).str();
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

}  // namespace goldie
