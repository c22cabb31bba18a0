#include "cubit/units.hpp"

#include <string>

#include "cubit/error.hpp"

namespace cubit {

std::string_view unit_name(Unit u) {
  switch (u) {
    case Unit::Finger: return "finger";
    case Unit::Palm: return "palm";
    case Unit::Fist: return "fist";
    case Unit::ShortCubit: return "short_cubit";
    case Unit::RoyalCubit: return "royal_cubit";
    case Unit::Millimeter: return "millimeter";
  }
  return "?";
}

const std::vector<Unit>& all_units() {
  static const std::vector<Unit> kUnits = {Unit::Finger,     Unit::Palm,
                                           Unit::Fist,       Unit::ShortCubit,
                                           Unit::RoyalCubit, Unit::Millimeter};
  return kUnits;
}

std::optional<Unit> parse_unit(std::string_view name) {
  for (Unit u : all_units()) {
    if (unit_name(u) == name) return u;
  }
  return std::nullopt;
}

Rational fingers_per_unit(Unit u, const std::optional<Rational>& finger_mm) {
  switch (u) {
    case Unit::Finger: return Rational(1);
    case Unit::Palm: return Rational(4);
    case Unit::Fist: return Rational(6);
    case Unit::ShortCubit: return Rational(24);
    case Unit::RoyalCubit: return Rational(28);
    case Unit::Millimeter:
      if (!finger_mm) throw PreconditionError("millimeter conversion needs a finger width");
      if (finger_mm->sign() <= 0) throw PreconditionError("finger width must be positive");
      return Rational(1) / *finger_mm;
  }
  return Rational(1);
}

Rational convert(const Rational& value, Unit from, Unit to,
                 const std::optional<Rational>& finger_mm) {
  if (from == to) return value;
  return value * fingers_per_unit(from, finger_mm) / fingers_per_unit(to, finger_mm);
}

ScaledQuantity apply_scale(const ScaledQuantity& q, Unit target_unit) {
  return {q.reading, target_unit};
}

Rational scale_factor(Unit from, Unit to, const std::optional<Rational>& finger_mm) {
  return convert(Rational(1), to, from, finger_mm);
}

}  // namespace cubit
