#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace setconc {

/// Exact rational number backed by GMP.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses an exact rational from text. Accepts integers ("-3"), fractions
/// ("3/2"), and decimal literals with optional exponent ("0.1", "2.5e-3").
/// Decimals are read as exact decimal fractions, so "0.1" is 1/10.
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Converts a finite double to the exact rational it represents in binary.
Rational rational_from_double(double value);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace setconc
