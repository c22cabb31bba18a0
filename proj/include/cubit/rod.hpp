#pragma once

// Rod geometry: fingers, notches between them and incisions that split
// selected fingers into equal parts.
//
// Positions are in fingers measured from the reading end of the graduated
// scale (the end where finger 1 sits). Finger i spans [i-1, i].

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubit/rational.hpp"

namespace cubit {

struct RodSpec {
  std::string name;
  Rational finger_length_mm{1};
  int finger_count = 1;
  // finger index (1-based) -> part-counts of the scales engraved on it
  std::map<int, std::vector<int>> subdivisions;
  bool has_ungraduated_extension = false;

  Rational length_fingers() const { return Rational(finger_count); }
  Rational length_mm() const { return finger_length_mm * finger_count; }

  friend bool operator==(const RodSpec&, const RodSpec&) = default;
};

// Throws SpecError on any invariant violation.
void validate(const RodSpec& rod);

RodSpec royal_cubit();
RodSpec short_cubit();
RodSpec gudea_rule();

// "royal"/"royal_cubit", "short"/"short_cubit", "gudea"/"gudea_rule".
std::optional<RodSpec> builtin_rod(std::string_view name);
std::vector<RodSpec> builtin_rods();

// Rod-spec documents are JSON objects with exactly the keys
// name, finger_length_mm, finger_count, subdivisions, ungraduated_extension.
RodSpec load_spec(std::string_view document);
std::string to_document(const RodSpec& rod);

enum class MarkKind { Notch, Incision };

struct Mark {
  MarkKind kind = MarkKind::Notch;
  Rational position;
  // Incision provenance; for notches finger = 0, parts = 1, index = 0.
  int finger = 0;
  int parts = 1;
  int index = 0;

  bool is_notch() const { return kind == MarkKind::Notch; }

  static Mark notch(int at) { return {MarkKind::Notch, Rational(at), 0, 1, 0}; }
  static Mark incision(int finger, int parts, int index) {
    return {MarkKind::Incision, Rational(finger - 1) + Rational(index, parts),
            finger, parts, index};
  }

  friend bool operator==(const Mark&, const Mark&) = default;
};

// Ascending by position; coincident incisions ordered by part-count.
std::vector<Mark> marks(const RodSpec& rod);

// Every distance |mark - notch| over all notches and marks, deduplicated and
// sorted ascending.
std::vector<Rational> achievable_values(const RodSpec& rod);

// Same rod read from the other end: finger i becomes finger_count + 1 - i.
RodSpec mirror(const RodSpec& rod);

// Position of a mark on mirror(rod), and the mark it becomes there.
Mark mirror_mark(const Mark& m, int finger_count);

}  // namespace cubit
