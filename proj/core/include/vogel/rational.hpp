#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vogel {

using BigInt = mpz_class;
/// Exact rational; gmpxx keeps results canonical (reduced, positive denominator).
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "7", "-3", "2/3", "-10/4". Whitespace is not accepted.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

bool is_integer(const Rational& value);
int sign_of(const Rational& value);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace vogel
