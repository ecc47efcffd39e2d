#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace epsnc {

/// Exact scalar field. gmpxx keeps results of arithmetic in lowest terms with
/// a positive denominator.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws InvalidArgument on malformed input or a
/// zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

}  // namespace epsnc
