#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace l2inv {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q" in
/// lowest terms with q > 0.
std::string rational_to_string(const Rational& q);

/// Accepts "p", "p/q", decimal point form ("0.25", "-1.5") and integer
/// scientific form ("1e100", "25e-3").  Returns nullopt on malformed input
/// or a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

/// Integer in scientific or plain form ("1e100", "137").  The exponent must
/// be non-negative.  Returns nullopt on malformed input.
std::optional<Int> parse_big_integer(const std::string& text);

/// Decimal expansion of q truncated toward zero after `digits` fractional
/// digits, e.g. (-7/3, 4) -> "-2.3333".
std::string decimal_truncated(const Rational& q, int digits);

/// Longest common prefix of the truncated decimal expansions of lo and hi.
/// Both endpoints must be non-negative; the result is what can be printed
/// about a number only known to lie in [lo, hi].
std::string decimal_agreeing_digits(const Rational& lo, const Rational& hi, int digits);

}  // namespace l2inv
