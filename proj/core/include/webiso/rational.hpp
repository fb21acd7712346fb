#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace webiso {

using Rational = mpq_class;
using Integer = mpz_class;

/// A point of Q^n.
using Point = std::vector<Rational>;

/// Parses "p", "-p", "p/q" (canonicalized). Throws Error on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text ("p" when q = 1).
std::string to_string(const Rational& q);

/// Larger of the numerator and denominator bit lengths.
std::size_t bit_size(const Rational& q);

Rational rational_pow(const Rational& base, long exponent);

Point parse_point(const std::vector<std::string>& coords);

}  // namespace webiso
