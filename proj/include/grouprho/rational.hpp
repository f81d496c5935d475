#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace grouprho {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Rounding { down, up };

// "num/den", always with an explicit denominator.
std::string to_string(const Rational& q);

// Accepts "3", "-2", "3/2", "0.125", "1e-6", "2.5E3".
Rational parse_rational(std::string_view text);

Integer ipow(const Integer& base, unsigned long exponent);
Rational ipow(const Rational& base, unsigned long exponent);

// Decimal string of q with exactly `digits` fractional digits, rounded in
// the given direction.
std::string to_decimal(const Rational& q, unsigned digits, Rounding direction);

// The rational value of to_decimal(q, digits, direction).
Rational decimal_round(const Rational& q, unsigned digits, Rounding direction);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

}  // namespace grouprho
