#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace qmm {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. Every exact quantity in the library (Weingarten values,
// moments, spectra) is one of these; no floating point ever enters the
// exact paths.
using Rational = boost::multiprecision::cpp_rational;

// Canonical "num/den" rendering, e.g. "-1/60", "3/1", "0/1".
std::string to_fraction_string(const Rational& x);

// Accepts "3", "-5/7", and finite decimals like "0.25" (parsed exactly).
std::optional<Rational> parse_rational(std::string_view text);

// x^e for integer e; e < 0 requires x != 0.
Rational pow_rational(const Rational& x, long e);

double to_double(const Rational& x);

}  // namespace qmm
