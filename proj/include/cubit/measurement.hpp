#pragma once

// Zero-free measurement with a graduated rod: one end of the segment sits
// on a notch, the other on whichever mark (notch or incision) fits best.
// Drawing is the inverse: pick a notch/mark pair realizing a given reading.

#include <string>
#include <string_view>
#include <vector>

#include "cubit/rational.hpp"
#include "cubit/rod.hpp"

namespace cubit {

// whole fingers + fraction in [0, 1)
struct Reading {
  BigInt whole{0};
  Rational fraction;
  Rational value;

  static Reading of(const Rational& v);
  friend bool operator==(const Reading&, const Reading&) = default;
};

// "W", "W p/q", or "p/q" when whole is 0.
std::string format_reading(const Reading& r);
Reading parse_reading(std::string_view text);

enum class Direction { LeftToRight, RightToLeft };
std::string_view to_string(Direction d);

struct Alignment {
  int start_notch = 0;
  Mark end_mark;
  Direction direction = Direction::LeftToRight;
  Rational measured_value;

  friend bool operator==(const Alignment&, const Alignment&) = default;
};

Alignment make_alignment(int start_notch, const Mark& end_mark);

// Preferred-first: smaller end-mark part-count, lower start notch, then
// LeftToRight before RightToLeft.
bool alignment_precedes(const Alignment& a, const Alignment& b);

// The same physical alignment described on mirror(rod).
Alignment mirror_alignment(const Alignment& a, int finger_count);

struct MeasurementResult {
  Reading reading;
  Alignment alignment;
  Rational error_fingers;  // reading - target
  Rational error_mm;
};

// Precomputed marks, achievable values and one canonical alignment per
// value. Building one is the expensive part; queries are O(log n).
class RodIndex {
 public:
  explicit RodIndex(RodSpec rod);

  const RodSpec& rod() const { return rod_; }
  const std::vector<Mark>& marks() const { return marks_; }
  const std::vector<Rational>& values() const { return values_; }

  bool achievable(const Rational& v) const;

  MeasurementResult best_reading(const Rational& target) const;
  MeasurementResult read_mm(const Rational& length_mm) const;
  std::vector<Alignment> alignments_for(const Rational& value) const;
  Alignment draw(const Reading& reading) const;

  // Index into values() of the achievable value nearest to target; ties go
  // to the smaller value. target must lie in [0, finger_count].
  std::size_t nearest(const Rational& target) const;
  const Alignment& canonical(std::size_t value_index) const {
    return canonical_[value_index];
  }

 private:
  RodSpec rod_;
  std::vector<Mark> marks_;
  std::vector<Rational> values_;
  std::vector<Alignment> canonical_;
};

MeasurementResult best_reading(const RodSpec& rod, const Rational& target);
MeasurementResult read_mm(const RodSpec& rod, const Rational& length_mm);
std::vector<Alignment> alignments_for(const RodSpec& rod, const Rational& value);
Alignment draw(const RodSpec& rod, const Reading& reading);

struct LongMeasurement {
  BigInt full_rods{0};
  MeasurementResult remainder;

  Rational total_value(const RodSpec& rod) const {
    return Rational(full_rods) * rod.finger_count + remainder.reading.value;
  }
};

// Whole rod lengths laid end to end, then the best reading of what is left.
LongMeasurement compose_long(const RodSpec& rod, const Rational& target);
LongMeasurement compose_long(const RodIndex& index, const Rational& target);

}  // namespace cubit
