// Exact rational scalars used throughout the library.
//
// Rational is an arbitrary-precision fraction kept in canonical form
// (reduced, positive denominator, zero represented as 0/1).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace bgg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical string form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rational_to_string(const Rational& q);

/// Parse "p" or "p/q" (optional leading '-'). Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational rational_from_string(std::string_view s);

}  // namespace bgg
