#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace extalg {

/// Arbitrary-precision exact rational; always kept in canonical form.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational make_rational(long num, long den = 1);

/// "p/q" in lowest terms, "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Always "p/q", including "p/1" for integers.
std::string to_fraction_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace extalg
