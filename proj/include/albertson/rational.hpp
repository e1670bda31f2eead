#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace albertson {

// All bound arithmetic is exact: arbitrary-precision integers and
// gcd-reduced fractions with positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_floor(const Rational &q) {
  Int num = numerator(q);
  Int den = denominator(q);  // > 0 by cpp_rational invariant
  Int d = num / den;
  if (num < 0 && d * den != num) --d;
  return d;
}

inline Int rat_ceil(const Rational &q) { return -rat_floor(-q); }

inline long long to_int64(const Int &v) {
  if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<long long>();
}

// Canonical "p/q" rendering, always with the denominator (e.g. "95/1").
inline std::string frac_str(const Rational &q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_frac(const std::string &s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("fraction denominator must be positive: " + s);
  return Rational(num, den);
}

}  // namespace albertson
