#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rellandau {

// Arbitrary-precision exact rational. All closed-form energies are evaluated
// in this type whenever the model parameters are themselves rational.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// The two-argument constructor rejects a negative denominator, so the sign
// moves to the numerator first.
inline Rational make_rational(long long num, long long den = 1) {
  if (den < 0) return Rational(-BigInt(num), -BigInt(den));
  return Rational(BigInt(num), BigInt(den));
}

// Parses "p", "p/q", or a decimal literal such as "0.25", "-3e-6", "1.5E+2".
// Decimal literals convert exactly (1e-6 becomes 1/1000000).
// Throws ConfigError on anything else.
Rational parse_rational(std::string_view text);

// Parses only "p/q" or "p" with p, q positive integers.
Rational parse_positive_fraction(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace rellandau
