#include "cubit/measurement.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "cubit/error.hpp"
#include "cubit/text.hpp"

namespace cubit {

Reading Reading::of(const Rational& v) {
  if (v.sign() < 0) {
    throw PreconditionError("a reading cannot be negative: " + to_fraction(v));
  }
  Reading r;
  r.whole = v.floor();
  r.fraction = v.fractional_part();
  r.value = v;
  return r;
}

std::string format_reading(const Reading& r) { return to_mixed(r.value); }

Reading parse_reading(std::string_view text) {
  return Reading::of(parse_quantity(text));
}

std::string_view to_string(Direction d) {
  return d == Direction::LeftToRight ? "left_to_right" : "right_to_left";
}

Alignment make_alignment(int start_notch, const Mark& end_mark) {
  const Rational start(start_notch);
  Alignment a;
  a.start_notch = start_notch;
  a.end_mark = end_mark;
  // Positions grow away from the reading end, which sits on the right.
  a.direction = end_mark.position > start ? Direction::RightToLeft
                                          : Direction::LeftToRight;
  a.measured_value = abs(end_mark.position - start);
  return a;
}

bool alignment_precedes(const Alignment& a, const Alignment& b) {
  if (a.end_mark.parts != b.end_mark.parts) return a.end_mark.parts < b.end_mark.parts;
  if (a.start_notch != b.start_notch) return a.start_notch < b.start_notch;
  return a.direction == Direction::LeftToRight && b.direction == Direction::RightToLeft;
}

Alignment mirror_alignment(const Alignment& a, int finger_count) {
  return make_alignment(finger_count - a.start_notch,
                        mirror_mark(a.end_mark, finger_count));
}

RodIndex::RodIndex(RodSpec rod) : rod_(std::move(rod)) {
  validate(rod_);
  marks_ = cubit::marks(rod_);

  std::vector<Alignment> all;
  all.reserve(marks_.size() * static_cast<std::size_t>(rod_.finger_count + 1));
  for (int a = 0; a <= rod_.finger_count; ++a) {
    for (const Mark& m : marks_) all.push_back(make_alignment(a, m));
  }
  std::sort(all.begin(), all.end(), [](const Alignment& x, const Alignment& y) {
    if (x.measured_value != y.measured_value) return x.measured_value < y.measured_value;
    return alignment_precedes(x, y);
  });
  for (Alignment& al : all) {
    if (values_.empty() || values_.back() != al.measured_value) {
      values_.push_back(al.measured_value);
      canonical_.push_back(std::move(al));
    }
  }
}

bool RodIndex::achievable(const Rational& v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

std::size_t RodIndex::nearest(const Rational& target) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), target);
  if (it == values_.begin()) return 0;
  if (it == values_.end()) return values_.size() - 1;
  const auto hi = static_cast<std::size_t>(it - values_.begin());
  const std::size_t lo = hi - 1;
  // Equidistant: keep the smaller value.
  return (values_[hi] - target) < (target - values_[lo]) ? hi : lo;
}

MeasurementResult RodIndex::best_reading(const Rational& target) const {
  if (target.sign() < 0) {
    throw PreconditionError("target length is negative: " + to_fraction(target));
  }
  if (target > rod_.length_fingers()) {
    throw PreconditionError("target " + to_mixed(target) + " fingers exceeds the " +
                            std::to_string(rod_.finger_count) +
                            "-finger rod; use compose_long");
  }
  const std::size_t i = nearest(target);
  MeasurementResult out;
  out.reading = Reading::of(values_[i]);
  out.alignment = canonical_[i];
  out.error_fingers = values_[i] - target;
  out.error_mm = out.error_fingers * rod_.finger_length_mm;
  return out;
}

MeasurementResult RodIndex::read_mm(const Rational& length_mm) const {
  if (length_mm.sign() < 0) {
    throw PreconditionError("length is negative: " + to_fraction(length_mm));
  }
  return best_reading(length_mm / rod_.finger_length_mm);
}

std::vector<Alignment> RodIndex::alignments_for(const Rational& value) const {
  std::vector<Alignment> out;
  if (value.sign() < 0 || !achievable(value)) return out;
  for (int a = 0; a <= rod_.finger_count; ++a) {
    const Rational notch(a);
    for (const Mark& m : marks_) {
      if (abs(m.position - notch) == value) out.push_back(make_alignment(a, m));
    }
  }
  std::sort(out.begin(), out.end(), alignment_precedes);
  return out;
}

Alignment RodIndex::draw(const Reading& reading) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), reading.value);
  if (it == values_.end() || *it != reading.value) {
    throw Unachievable("no notch/mark pair on " + rod_.name + " spans " +
                       format_reading(reading) + " fingers");
  }
  return canonical_[static_cast<std::size_t>(it - values_.begin())];
}

MeasurementResult best_reading(const RodSpec& rod, const Rational& target) {
  validate(rod);
  if (target.sign() < 0) {
    throw PreconditionError("target length is negative: " + to_fraction(target));
  }
  if (target > rod.length_fingers()) {
    throw PreconditionError("target " + to_mixed(target) + " fingers exceeds the " +
                            std::to_string(rod.finger_count) +
                            "-finger rod; use compose_long");
  }
  const std::vector<Mark> all = marks(rod);
  const int n = rod.finger_count;
  auto clamp_int = [](const BigInt& v, int lo, int hi) {
    if (v < lo) return lo;
    if (v > hi) return hi;
    return static_cast<int>(v.get_si());
  };

  // For one mark at p, ||p - a| - t| is convex in a on each side of p, so the
  // best notches are the integers next to p - t and p + t, clamped per side.
  std::optional<Rational> best_value;
  Rational best_dist;
  for (const Mark& m : all) {
    const Rational& p = m.position;
    const BigInt p_floor = p.floor();
    const BigInt p_ceil = p.is_integer() ? p_floor : BigInt(p_floor + 1);
    const int left_hi = clamp_int(p_floor, 0, n);
    const int right_lo = clamp_int(p_ceil, 0, n);
    const Rational below = p - target, above = p + target;
    const BigInt below_floor = below.floor(), above_floor = above.floor();
    const int candidates[] = {
        clamp_int(below_floor, 0, left_hi), clamp_int(below_floor + 1, 0, left_hi),
        clamp_int(above_floor, right_lo, n), clamp_int(above_floor + 1, right_lo, n)};
    for (int a : candidates) {
      const Rational value = abs(p - Rational(a));
      const Rational dist = abs(value - target);
      if (!best_value || dist < best_dist || (dist == best_dist && value < *best_value)) {
        best_value = value;
        best_dist = dist;
      }
    }
  }

  // Preferred alignment for the winning value: notch at p -/+ value.
  std::optional<Alignment> chosen;
  for (const Mark& m : all) {
    for (const Rational& a : {m.position - *best_value, m.position + *best_value}) {
      if (!a.is_integer() || a.sign() < 0 || a > rod.length_fingers()) continue;
      Alignment cand = make_alignment(static_cast<int>(a.numerator().get_si()), m);
      if (!chosen || alignment_precedes(cand, *chosen)) chosen = std::move(cand);
    }
  }

  MeasurementResult out;
  out.reading = Reading::of(*best_value);
  out.alignment = std::move(*chosen);
  out.error_fingers = *best_value - target;
  out.error_mm = out.error_fingers * rod.finger_length_mm;
  return out;
}

MeasurementResult read_mm(const RodSpec& rod, const Rational& length_mm) {
  return RodIndex(rod).read_mm(length_mm);
}

std::vector<Alignment> alignments_for(const RodSpec& rod, const Rational& value) {
  return RodIndex(rod).alignments_for(value);
}

Alignment draw(const RodSpec& rod, const Reading& reading) {
  return RodIndex(rod).draw(reading);
}

LongMeasurement compose_long(const RodIndex& index, const Rational& target) {
  if (target.sign() < 0) {
    throw PreconditionError("target length is negative: " + to_fraction(target));
  }
  const Rational rod_len = index.rod().length_fingers();
  LongMeasurement out;
  out.full_rods = (target / rod_len).floor();
  out.remainder = index.best_reading(target - Rational(out.full_rods) * rod_len);
  return out;
}

LongMeasurement compose_long(const RodSpec& rod, const Rational& target) {
  return compose_long(RodIndex(rod), target);
}

}  // namespace cubit
