#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubit/measurement.hpp"
#include "cubit/rational.hpp"

namespace cubit {

enum class Unit { Finger, Palm, Fist, ShortCubit, RoyalCubit, Millimeter };

std::string_view unit_name(Unit u);
std::optional<Unit> parse_unit(std::string_view name);
const std::vector<Unit>& all_units();

// Fingers in one unit. Millimeters need the finger width of the rod in use.
Rational fingers_per_unit(Unit u, const std::optional<Rational>& finger_mm = std::nullopt);

// Exact conversion pivoting through the finger. Throws PreconditionError
// when millimeters are involved and finger_mm is missing or not positive.
Rational convert(const Rational& value, Unit from, Unit to,
                 const std::optional<Rational>& finger_mm = std::nullopt);

struct ScaledQuantity {
  Reading reading;
  Unit unit = Unit::Finger;

  friend bool operator==(const ScaledQuantity&, const ScaledQuantity&) = default;
};

// Same numerals, new unit: "3 5/8 fingers" on a drawing becomes
// "3 5/8 royal cubits" on site.
ScaledQuantity apply_scale(const ScaledQuantity& q, Unit target_unit);

// Ratio of physical magnitudes apply_scale introduces (target / source).
Rational scale_factor(Unit from, Unit to,
                      const std::optional<Rational>& finger_mm = std::nullopt);

}  // namespace cubit
