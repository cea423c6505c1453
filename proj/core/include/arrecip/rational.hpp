#pragma once

// Scalar types for exact arithmetic. Integer and Rational are thin aliases for
// the GMP C++ classes; mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arrecip {

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Always "p/q", even for integers. Used by the JSON schema.
std::string to_fraction_string(const Rational& value);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

/// Converts an Integer that must fit in int64_t; throws std::overflow_error.
std::int64_t to_int64(const Integer& value);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace arrecip
