#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace monodep {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& x);
/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& x);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/// Converts to long, throwing std::overflow_error when it does not fit.
long to_long(const Integer& x);

}  // namespace monodep
