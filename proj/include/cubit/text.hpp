#pragma once

// Text codecs for quantities.
//
//   DECIMAL  := INT [("." | ",") DIGITS]
//   FRACTION := INT "/" POSINT
//   MIXED    := NONNEGINT " " FRACTION
//
// Both separators are accepted on input; only '.' is emitted.

#include <string>
#include <string_view>

#include "cubit/rational.hpp"

namespace cubit {

Rational parse_quantity(std::string_view text);

enum class RationalStyle { Fraction, Mixed, Decimal };

struct FormatStyle {
  RationalStyle style = RationalStyle::Fraction;
  int digits = 6;  // Decimal only, digits after the point

  static FormatStyle fraction() { return {RationalStyle::Fraction, 0}; }
  static FormatStyle mixed() { return {RationalStyle::Mixed, 0}; }
  static FormatStyle decimal(int digits) {
    return {RationalStyle::Decimal, digits};
  }
};

// Fraction: "p/q". Mixed: "w p/q" with 0 <= p/q < 1; "w" when integral,
// "p/q" when |value| < 1. Decimal: rounded half away from zero.
std::string format_rational(const Rational& r, FormatStyle style);

inline std::string to_fraction(const Rational& r) {
  return format_rational(r, FormatStyle::fraction());
}
inline std::string to_mixed(const Rational& r) {
  return format_rational(r, FormatStyle::mixed());
}
inline std::string to_decimal(const Rational& r, int digits) {
  return format_rational(r, FormatStyle::decimal(digits));
}

}  // namespace cubit
