#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mostar {

// All bound arithmetic is exact: integers where possible, arbitrary-precision
// rationals everywhere a division appears. Floating point is confined to the
// few places where square roots are unavoidable (see certificate.hpp).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Int = std::int64_t;

inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

// Canonical "p/q" form used by every machine-readable output.
inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  s += '/';
  s += denominator(r).str();
  return s;
}

std::string format_rational_decimal(const Rational& r, int digits = 6);
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& r) {
  return static_cast<double>(r);
}

}  // namespace mostar
