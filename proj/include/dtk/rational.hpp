#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace dtk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal such as "-1.25" or "3e-2".
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "n" for integers, "p/q" otherwise (lowest terms).
std::string format_rational(const Rational& value);

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double value);

/// Doubles lo <= value <= hi, each at most one ulp away.
std::pair<double, double> enclose_in_doubles(const Rational& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

/// floor(sqrt(value)) for value >= 0.
Integer isqrt(const Integer& value);

/// Number of bits of |value| (0 for zero).
std::size_t bit_length(const Integer& value);

/// 2^exponent as an exact integer.
Integer power_of_two(unsigned long exponent);

}  // namespace dtk
