#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace rigid {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Always normalized: lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                              boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// D(r): the denominator of r written in lowest terms.
inline Integer D(const Rational& r) { return denominator_of(r); }

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

/// Fractional part r - floor(r), always in [0, 1).
Rational frac_of(const Rational& r);

Integer gcd(const Integer& a, const Integer& b);

/// Narrowing conversion used where a value indexes or sizes a word.
/// Throws std::overflow_error when the value does not fit.
std::int64_t to_i64(const Integer& v);

std::string to_string(const Integer& v);
std::string to_string(const Rational& r);

}  // namespace rigid
