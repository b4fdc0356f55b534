#include "rigidroots/arith.hpp"

#include <limits>
#include <stdexcept>

namespace rigid {

Integer floor_of(const Rational& r) {
  const Integer n = numerator_of(r);
  const Integer d = denominator_of(r);
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

Integer ceil_of(const Rational& r) { return -floor_of(-r); }

Rational frac_of(const Rational& r) { return r - Rational(floor_of(r)); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (y != 0) {
    Integer t = x % y;
    x = y;
    y = t;
  }
  return x;
}

std::int64_t to_i64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer " + v.str() + " does not fit in 64 bits");
  return v.convert_to<std::int64_t>();
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

}  // namespace rigid
