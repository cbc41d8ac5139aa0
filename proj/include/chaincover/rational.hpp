#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace chaincover {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses an exact decimal string ("-0.25", "2.1", "3") into a rational.
// Throws std::invalid_argument on anything that is not a plain decimal.
Rational parse_decimal(const std::string& text);

// Renders a rational as a terminating decimal when the denominator is of
// the form 2^a * 5^b, otherwise as "p/q".
std::string format_exact(const Rational& value);

}  // namespace chaincover
