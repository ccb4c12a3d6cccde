#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace superhomology {

using Integer = mpz_class;
using Rational = mpq_class;

/// Named parameter values, e.g. {"alpha": -1}.
using Bindings = std::map<std::string, Rational, std::less<>>;

/// Parses "p/q" or "p" (optional leading sign, no decimals). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

} // namespace superhomology
