#include "mostar/numeric.hpp"

#include <sstream>

namespace mostar {

std::string format_rational_decimal(const Rational& r, int digits) {
  const bool neg = r < 0;
  Rational a = neg ? Rational(-r) : r;
  BigInt whole = numerator(a) / denominator(a);
  Rational frac = a - Rational(whole);
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half up
  BigInt scaled = (numerator(frac) * scale * 2 + denominator(frac)) /
                  (denominator(frac) * 2);
  if (scaled >= scale) {
    whole += 1;
    scaled -= scale;
  }
  std::ostringstream out;
  if (neg && (whole != 0 || scaled != 0)) out << '-';
  out << whole;
  if (digits > 0) {
    std::string f = scaled.str();
    out << '.' << std::string(static_cast<size_t>(digits) - f.size(), '0') << f;
  }
  return out.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

}  // namespace mostar
