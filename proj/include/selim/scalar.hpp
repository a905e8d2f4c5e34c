#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace selim {

// Exact arithmetic substrate. GMP keeps rationals canonical (positive
// denominator, coprime with the numerator) through every arithmetic
// operation; the parsing helpers below re-canonicalize explicitly.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws schema_error on malformed input or a
/// zero denominator.
Rational rational_from_string(const std::string& text);

/// num/den in canonical form (domain_error on a zero denominator). The raw
/// two-argument mpq_class constructor does not canonicalize; this does.
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Rational& value); // "p" or "p/q"
std::string to_string(const Integer& value);

/// base^exp with integer exponent; negative exponents invert, so base must
/// be nonzero there (domain_error otherwise). 0^0 = 1.
Rational rational_pow(const Rational& base, std::int64_t exp);

Integer integer_pow(const Integer& base, std::uint64_t exp);

Integer factorial(std::uint64_t n);

bool is_integer(const Rational& value);

/// Throws domain_error unless the denominator is 1.
Integer to_integer(const Rational& value);

/// True iff value >= 0 and both numerator and denominator are squares in Z.
bool is_perfect_square(const Rational& value);

/// Nonnegative square root of a perfect square (domain_error otherwise).
Rational exact_sqrt(const Rational& value);

} // namespace selim
