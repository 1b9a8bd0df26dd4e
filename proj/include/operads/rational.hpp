#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace operads {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar over arbitrary-precision integers.
/// Always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(unsigned n);
Integer binomial(const Integer& n, unsigned k);

/// Parses "p" or "p/q" with an optional leading sign. Throws on malformed
/// input or a zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

}  // namespace operads
