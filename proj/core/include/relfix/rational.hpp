#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace relfix {

/// All distance values, contraction constants and integrals are exact
/// rationals; the workbench performs no floating-point comparison anywhere.
using Rational = mpq_class;

/// Parses "p/q" or a plain integer string (optional leading minus).
/// The result is canonicalized, so parse_rational("4/2") == 2.
/// Throws InstanceError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical textual form: "p/q" when the denominator is not 1, else "p".
std::string to_string(const Rational& value);

/// base^exponent for a nonnegative integer exponent (exact).
Rational rational_pow(const Rational& base, unsigned long exponent);

} // namespace relfix
