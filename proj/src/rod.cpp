#include "cubit/rod.hpp"

#include <algorithm>
#include <set>
#include <string>

#include <json.hpp>

#include "cubit/error.hpp"
#include "cubit/text.hpp"

namespace cubit {

void validate(const RodSpec& rod) {
  if (rod.finger_count < 1) {
    throw SpecError("finger_count must be positive, got " +
                    std::to_string(rod.finger_count));
  }
  if (rod.finger_length_mm.sign() <= 0) {
    throw SpecError("finger_length_mm must be positive");
  }
  for (const auto& [finger, parts] : rod.subdivisions) {
    if (finger < 1 || finger > rod.finger_count) {
      throw SpecError("subdivision finger " + std::to_string(finger) +
                      " outside 1.." + std::to_string(rod.finger_count));
    }
    if (parts.empty()) {
      throw SpecError("finger " + std::to_string(finger) + " has no scales");
    }
    for (int q : parts) {
      if (q < 2) {
        throw SpecError("finger " + std::to_string(finger) +
                        " has part-count " + std::to_string(q) + " (< 2)");
      }
    }
  }
}

RodSpec royal_cubit() {
  RodSpec rod;
  rod.name = "royal_cubit";
  rod.finger_length_mm = Rational(75, 4);
  rod.finger_count = 28;
  for (int i = 1; i <= 15; ++i) rod.subdivisions[i] = {i + 1};
  rod.has_ungraduated_extension = true;
  return rod;
}

RodSpec short_cubit() {
  RodSpec rod;
  rod.name = "short_cubit";
  rod.finger_length_mm = Rational(75, 4);
  rod.finger_count = 24;
  return rod;
}

RodSpec gudea_rule() {
  RodSpec rod;
  rod.name = "gudea_rule";
  rod.finger_length_mm = Rational(84, 5);
  rod.finger_count = 16;
  // Alternate fingers from the reading end, refining 2..6; the last divided
  // finger also carries the halves and thirds of its sixths.
  rod.subdivisions = {{1, {2}}, {3, {3}}, {5, {4}}, {7, {5}}, {9, {6, 12, 18}}};
  return rod;
}

std::optional<RodSpec> builtin_rod(std::string_view name) {
  if (name == "royal" || name == "royal_cubit") return royal_cubit();
  if (name == "short" || name == "short_cubit") return short_cubit();
  if (name == "gudea" || name == "gudea_rule") return gudea_rule();
  return std::nullopt;
}

std::vector<RodSpec> builtin_rods() {
  return {royal_cubit(), short_cubit(), gudea_rule()};
}

RodSpec load_spec(std::string_view document) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("rod-spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("rod-spec must be a JSON object");

  static const std::set<std::string> kKeys = {
      "name", "finger_length_mm", "finger_count", "subdivisions",
      "ungraduated_extension"};
  for (const auto& item : doc.items()) {
    if (!kKeys.contains(item.key())) {
      throw ParseError("rod-spec has unknown field '" + item.key() + "'");
    }
  }
  for (const auto& key : kKeys) {
    if (!doc.contains(key)) throw ParseError("rod-spec is missing '" + key + "'");
  }

  RodSpec rod;
  try {
    rod.name = doc.at("name").get<std::string>();
    rod.finger_length_mm =
        parse_quantity(doc.at("finger_length_mm").get<std::string>());
    rod.finger_count = doc.at("finger_count").get<int>();
    rod.has_ungraduated_extension = doc.at("ungraduated_extension").get<bool>();
    const json& subs = doc.at("subdivisions");
    if (!subs.is_array()) throw ParseError("subdivisions must be a list");
    for (const json& entry : subs) {
      if (!entry.is_object() || entry.size() != 2 || !entry.contains("finger") ||
          !entry.contains("parts")) {
        throw ParseError("subdivision entries are {\"finger\": int, \"parts\": [int]}");
      }
      const int finger = entry.at("finger").get<int>();
      if (rod.subdivisions.contains(finger)) {
        throw ParseError("finger " + std::to_string(finger) + " listed twice");
      }
      rod.subdivisions[finger] = entry.at("parts").get<std::vector<int>>();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("rod-spec field has the wrong type: ") + e.what());
  }
  validate(rod);
  return rod;
}

std::string to_document(const RodSpec& rod) {
  nlohmann::ordered_json doc;
  doc["name"] = rod.name;
  doc["finger_length_mm"] = to_fraction(rod.finger_length_mm);
  doc["finger_count"] = rod.finger_count;
  auto subs = nlohmann::ordered_json::array();
  for (const auto& [finger, parts] : rod.subdivisions) {
    subs.push_back({{"finger", finger}, {"parts", parts}});
  }
  doc["subdivisions"] = std::move(subs);
  doc["ungraduated_extension"] = rod.has_ungraduated_extension;
  return doc.dump(2);
}

std::vector<Mark> marks(const RodSpec& rod) {
  std::vector<Mark> out;
  for (int a = 0; a <= rod.finger_count; ++a) out.push_back(Mark::notch(a));
  for (const auto& [finger, scales] : rod.subdivisions) {
    for (int q : scales) {
      for (int j = 1; j < q; ++j) out.push_back(Mark::incision(finger, q, j));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Mark& x, const Mark& y) {
    if (x.position != y.position) return x.position < y.position;
    return x.parts < y.parts;
  });
  return out;
}

std::vector<Rational> achievable_values(const RodSpec& rod) {
  const std::vector<Mark> all = marks(rod);
  std::vector<Rational> values;
  values.reserve(all.size() * static_cast<std::size_t>(rod.finger_count + 1));
  for (int a = 0; a <= rod.finger_count; ++a) {
    const Rational notch(a);
    for (const Mark& m : all) values.push_back(abs(m.position - notch));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

RodSpec mirror(const RodSpec& rod) {
  RodSpec out = rod;
  out.subdivisions.clear();
  for (const auto& [finger, parts] : rod.subdivisions) {
    out.subdivisions[rod.finger_count + 1 - finger] = parts;
  }
  return out;
}

Mark mirror_mark(const Mark& m, int finger_count) {
  if (m.is_notch()) {
    return Mark::notch(finger_count - static_cast<int>(m.position.floor().get_si()));
  }
  return Mark::incision(finger_count + 1 - m.finger, m.parts, m.parts - m.index);
}

}  // namespace cubit
