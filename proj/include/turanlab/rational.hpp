#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace turanlab {

/// Exact arbitrary-precision rational. Bound comparisons never touch floating point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "a" when integral, otherwise "a/b" in lowest terms.
std::string to_string(const Rational& r);

/// Accepts "3", "-2", "7/4", "0.5", "1e-3" style decimals; exact conversion.
/// Throws ArgumentError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

[[nodiscard]] inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

/// floor(r) as a long long. r must fit.
long long floor_to_ll(const Rational& r);

double to_double(const Rational& r);

}  // namespace turanlab
