#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symprove {

using Integer = mpz_class;

// mpq_class keeps numerator and denominator coprime with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;

/// Parses "n" or "n/d" (optional leading sign, d > 0). Throws Error.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_one(const Rational& value) { return value == 1; }

} // namespace symprove
