#pragma once

// Egyptian notation: an integer part, optionally 2/3, then distinct unit
// fractions in ascending denominator order, e.g. "3 1/2 1/8".

#include <string>
#include <string_view>
#include <vector>

#include "cubit/rational.hpp"

namespace cubit {

struct UnitFractionSum {
  BigInt whole{0};
  bool has_two_thirds = false;
  std::vector<BigInt> unit_denominators;  // strictly increasing, each >= 2

  Rational value() const;
  friend bool operator==(const UnitFractionSum&, const UnitFractionSum&) = default;
};

// Repeatedly subtract the largest unit fraction not exceeding the remainder.
UnitFractionSum greedy_decompose(const Rational& r);

// With use_two_thirds, a fractional part >= 2/3 first spends the 2/3 sign
// and greedy-decomposes the rest (9/10 -> 2/3 1/5 1/30).
UnitFractionSum egyptian_decompose(const Rational& r, bool use_two_thirds);

// Dyadic parts 1/2 .. 1/64. Throws NotDyadic unless r = k/64, 0 <= k < 64.
std::vector<int> horus_decompose(const Rational& r);

std::string render(const UnitFractionSum& s);
UnitFractionSum parse_notation(std::string_view text);

}  // namespace cubit
