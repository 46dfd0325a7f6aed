#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace balanced {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, kept in lowest terms with positive denominator.
/// Every quantity in this library is a Rational; nothing is ever rounded.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den with sign normalization. Throws InputError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q" or "p" (q positive, p optionally negative).
/// Throws InputError on any other shape.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

std::string to_string(const Integer& value);

}  // namespace balanced
