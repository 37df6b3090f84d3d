#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hv {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Parses `p` or `p/q` (optional sign, no spaces). Throws SyntaxError or
/// DivisionByZero.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace hv
