#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jido {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);

}  // namespace jido
