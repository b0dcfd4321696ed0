#pragma once

// Exact number types. Everything in the library is computed with these;
// floating point only appears in presentation helpers (to_decimal).

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a", "-a" or "a/b" (surrounding whitespace allowed). Throws ValidationError.
Rational parse_rational(std::string_view text);

/// Parses a decimal integer. Throws ValidationError.
Integer parse_integer(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Decimal expansion rounded half away from zero to `digits` fractional digits.
std::string to_decimal(const Rational& value, int digits);

Integer ceil(const Rational& value);
Integer floor(const Rational& value);
Integer gcd(const Integer& a, const Integer& b);

/// Least integer >= from that is coprime to `modulus` (modulus != 0).
Integer next_coprime(const Integer& from, const Integer& modulus);

} // namespace toric
