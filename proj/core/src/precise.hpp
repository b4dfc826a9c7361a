#pragma once

// High-precision helpers for the two log-based bounds. Results are the exact
// dyadic rationals of the rounded MPFR values.

#include "ucube/rational.hpp"

namespace ucube::detail {

inline constexpr long kLogPrecisionBits = 128;

/// numerator / ln(argument); requires argument > 0, argument != 1.
Rational ratio_over_log(const Rational& numerator, const Rational& argument);

/// numerator / log2(argument).
Rational ratio_over_log2(const Rational& numerator, const Rational& argument);

}  // namespace ucube::detail
