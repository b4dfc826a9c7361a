#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ucube {

/// Exact arbitrary-precision rational; GMP keeps it canonical (reduced,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown for malformed textual input (rationals, family files, weights).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses `a/b`, a plain integer, or a decimal literal such as `0.375` or
/// `-2.5e-1`. Decimals are converted exactly (digits over a power of ten).
Rational parse_rational(std::string_view text);

/// Always `a/b`, including integers (`1/1`, `0/1`).
std::string to_string(const Rational& value);

/// `a/b`, or just `a` when the denominator is one.
std::string to_short_string(const Rational& value);

double to_double(const Rational& value);

Rational pow2(unsigned exponent);

}  // namespace ucube
