#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superlie {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Non-reduced fractions are accepted and normalized.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace superlie
