#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace newtonpoly {

/// Exact rational number. GMP keeps every value canonical (reduced, positive
/// denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", "p/q" or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// Non-negative integer power.
Rational pow(const Rational& base, unsigned long exponent);

/// Converts to long; the caller guarantees the value is an integer that fits.
long to_long(const Rational& r);

double to_double(const Rational& r);

Integer lcm(const Integer& a, const Integer& b);

/// Simplest rational (smallest denominator, then smallest |numerator|)
/// strictly between lo and hi. Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace newtonpoly
