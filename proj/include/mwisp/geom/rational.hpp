#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mwisp::geom {

/// Exact coordinate / weight type. Every kernel operation is exact.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or "p" (optional leading '-'). Decimal notation is rejected
/// so that no value is ever rounded on the way in.
Rational parse_rational(std::string_view text);

/// Parses a decimal integer string.
BigInt parse_integer(std::string_view text);

/// Always "p/q" (q = 1 for integers), canonical form.
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace mwisp::geom
