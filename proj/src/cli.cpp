#include "cubit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubit/analysis.hpp"
#include "cubit/egyptian.hpp"
#include "cubit/error.hpp"
#include "cubit/measurement.hpp"
#include "cubit/rod.hpp"
#include "cubit/text.hpp"
#include "cubit/units.hpp"

namespace cubit {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct Options {
  std::string rod = "royal";
  std::string format = "text";

  std::optional<std::string> length_mm, length_fingers;
  bool compose = false;
  std::string reading;
  std::string value;
  std::string strategy = "greedy";
  std::optional<std::string> range;
  std::string step = "1/4";
  std::string epsilon_mm = "0";
  int trials = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> targets;
  std::string other;
  std::optional<std::string> out_path;
  std::string from, to;
  std::optional<std::string> finger_mm;
  std::string show_name;
};

RodSpec resolve_rod(const std::string& selector) {
  if (auto rod = builtin_rod(selector)) return *rod;
  std::ifstream in(selector);
  if (!in) {
    throw PreconditionError("unknown rod '" + selector +
                            "' (not a built-in name or a readable spec file)");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return load_spec(buf.str());
}

std::pair<Rational, Rational> parse_range(const std::optional<std::string>& text,
                                          const RodSpec& rod) {
  if (!text) return {Rational(0), rod.length_fingers()};
  const auto colon = text->find(':');
  if (colon == std::string::npos) throw ParseError("range must be lo:hi, got '" + *text + "'");
  return {parse_quantity(std::string_view(*text).substr(0, colon)),
          parse_quantity(std::string_view(*text).substr(colon + 1))};
}

Json alignment_json(const Alignment& a) {
  Json j;
  j["start_notch"] = a.start_notch;
  if (a.end_mark.is_notch()) {
    j["finger"] = nullptr;
  } else {
    j["finger"] = a.end_mark.finger;
  }
  j["parts"] = a.end_mark.parts;
  j["index"] = a.end_mark.index;
  j["direction"] = std::string(to_string(a.direction));
  j["end_position"] = to_mixed(a.end_mark.position);
  return j;
}

std::string alignment_text(const Alignment& a) {
  std::ostringstream s;
  s << "notch " << a.start_notch << " -> ";
  if (a.end_mark.is_notch()) {
    s << "notch " << to_mixed(a.end_mark.position);
  } else {
    s << "incision " << a.end_mark.index << " of " << a.end_mark.parts
      << " on finger " << a.end_mark.finger;
  }
  s << " (" << to_string(a.direction) << ")";
  return s.str();
}

std::string error_text(const Rational& fingers, const Rational& mm) {
  return to_mixed(fingers) + " fingers (" + to_decimal(mm, 6) + " mm)";
}

void write_output(const Options& opt, const std::string& text, std::ostream& out) {
  if (!opt.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*opt.out_path);
  if (!file) throw PreconditionError("cannot write " + *opt.out_path);
  file << text;
}

int cmd_measure(const Options& opt, Format fmt, std::ostream& out) {
  if (opt.length_mm.has_value() == opt.length_fingers.has_value()) {
    throw PreconditionError("measure needs exactly one of --length-mm or --length-fingers");
  }
  const RodIndex index(resolve_rod(opt.rod));
  const RodSpec& rod = index.rod();
  Rational target = opt.length_fingers ? parse_quantity(*opt.length_fingers)
                                       : parse_quantity(*opt.length_mm);
  if (opt.length_mm) {
    if (target.sign() < 0) throw PreconditionError("length is negative");
    target /= rod.finger_length_mm;
  }

  BigInt full_rods = 0;
  MeasurementResult m;
  if (opt.compose) {
    LongMeasurement lm = compose_long(index, target);
    full_rods = lm.full_rods;
    m = std::move(lm.remainder);
  } else {
    if (target > rod.length_fingers()) {
      throw PreconditionError("length " + to_mixed(target) + " fingers exceeds the " +
                              std::to_string(rod.finger_count) +
                              "-finger rod; add --compose for a multi-rod measurement");
    }
    m = index.best_reading(target);
  }
  const std::string reading = format_reading(m.reading);
  const std::string notation = render(greedy_decompose(m.reading.value));

  switch (fmt) {
    case Format::Json: {
      Json j;
      j["rod"] = rod.name;
      if (opt.compose) j["full_rods"] = full_rods.get_str();
      j["reading"] = reading;
      j["notation"] = notation;
      j["alignment"] = alignment_json(m.alignment);
      j["error_fingers"] = to_mixed(m.error_fingers);
      j["error_mm"] = to_mixed(m.error_mm);
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "reading,notation,start_notch,finger,parts,index,direction,error_fingers,error_mm\n"
          << reading << ',' << notation << ',' << m.alignment.start_notch << ','
          << m.alignment.end_mark.finger << ',' << m.alignment.end_mark.parts << ','
          << m.alignment.end_mark.index << ',' << to_string(m.alignment.direction) << ','
          << to_decimal(m.error_fingers, 6) << ',' << to_decimal(m.error_mm, 6) << '\n';
      break;
    case Format::Text:
      if (opt.compose) out << "full rods: " << full_rods.get_str() << '\n';
      out << "reading: " << reading << '\n'
          << "egyptian: " << notation << '\n'
          << "alignment: " << alignment_text(m.alignment) << '\n'
          << "error: " << error_text(m.error_fingers, m.error_mm) << '\n';
      break;
  }
  return 0;
}

int cmd_draw(const Options& opt, Format fmt, std::ostream& out) {
  const RodIndex index(resolve_rod(opt.rod));
  const Reading reading = parse_reading(opt.reading);
  const Alignment a = index.draw(reading);
  if (fmt == Format::Json) {
    Json j;
    j["rod"] = index.rod().name;
    j["reading"] = format_reading(reading);
    j["alignment"] = alignment_json(a);
    out << j.dump() << '\n';
  } else {
    out << "reading: " << format_reading(reading) << '\n'
        << "start notch: " << a.start_notch << '\n'
        << "end mark: "
        << (a.end_mark.is_notch()
                ? "notch " + to_mixed(a.end_mark.position)
                : "incision " + std::to_string(a.end_mark.index) + " of " +
                      std::to_string(a.end_mark.parts) + " on finger " +
                      std::to_string(a.end_mark.finger))
        << '\n'
        << "direction: " << to_string(a.direction) << '\n';
  }
  return 0;
}

int cmd_decompose(const Options& opt, Format fmt, std::ostream& out) {
  const Rational v = parse_quantity(opt.value);
  UnitFractionSum s;
  if (opt.strategy == "greedy") {
    s = greedy_decompose(v);
  } else if (opt.strategy == "two-thirds") {
    s = egyptian_decompose(v, true);
  } else {
    for (int d : horus_decompose(v)) s.unit_denominators.emplace_back(d);
  }
  const std::string notation = render(s);
  if (fmt == Format::Json) {
    Json j;
    j["value"] = to_mixed(v);
    j["strategy"] = opt.strategy;
    j["notation"] = notation;
    out << j.dump() << '\n';
  } else {
    out << notation << '\n';
  }
  return 0;
}

Json gap_json(const GapReport& g) {
  Json j;
  j["lo"] = to_mixed(g.lo);
  j["hi"] = to_mixed(g.hi);
  j["value_count"] = g.value_count;
  j["max_gap"] = to_mixed(g.max_gap);
  j["max_gap_location"] = {to_mixed(g.max_gap_location.first),
                           to_mixed(g.max_gap_location.second)};
  j["worst_case_error"] = to_mixed(g.worst_case_error);
  return j;
}

void gap_text(const GapReport& g, const RodSpec& rod, std::ostream& out,
              const std::string& prefix = "") {
  out << prefix << "range: " << to_mixed(g.lo) << ":" << to_mixed(g.hi) << '\n'
      << prefix << "values: " << g.value_count << '\n'
      << prefix << "max_gap: " << to_mixed(g.max_gap) << " finger between "
      << to_mixed(g.max_gap_location.first) << " and "
      << to_mixed(g.max_gap_location.second) << '\n'
      << prefix << "worst_case_error: " << to_mixed(g.worst_case_error) << " finger ("
      << to_decimal(g.worst_case_error * rod.finger_length_mm, 6) << " mm)\n";
}

int cmd_gaps(const Options& opt, Format fmt, std::ostream& out) {
  const RodIndex index(resolve_rod(opt.rod));
  const auto [lo, hi] = parse_range(opt.range, index.rod());
  const GapReport g = gap_analysis(index, lo, hi);
  if (fmt == Format::Json) {
    Json j = gap_json(g);
    j["rod"] = index.rod().name;
    out << j.dump() << '\n';
  } else {
    gap_text(g, index.rod(), out);
  }
  return 0;
}

int cmd_sweep(const Options& opt, Format fmt, std::ostream& out) {
  const RodIndex index(resolve_rod(opt.rod));
  const auto [lo, hi] = parse_range(opt.range, index.rod());
  const auto records = sweep(index, lo, hi, parse_quantity(opt.step));
  if (fmt == Format::Json) {
    Json rows = Json::array();
    for (const SweepRecord& r : records) {
      rows.push_back({{"target", to_mixed(r.target)},
                      {"reading", to_mixed(r.reading_value)},
                      {"error_fingers", to_mixed(r.error_fingers)},
                      {"error_mm", to_mixed(r.error_mm)}});
    }
    write_output(opt, Json{{"rod", index.rod().name}, {"records", rows}}.dump() + "\n", out);
  } else {
    write_output(opt, sweep_csv(records), out);
  }
  return 0;
}

int cmd_perturb(const Options& opt, Format fmt, std::ostream& out) {
  const RodIndex index(resolve_rod(opt.rod));
  std::vector<Rational> targets;
  if (!opt.targets.empty()) {
    for (const std::string& t : opt.targets) targets.push_back(parse_quantity(t));
  } else {
    const auto [lo, hi] = parse_range(opt.range, index.rod());
    targets = sweep_targets(lo, hi, parse_quantity(opt.step));
  }
  const PerturbationReport r =
      perturb(index, parse_quantity(opt.epsilon_mm), opt.trials, opt.seed, targets);
  if (fmt == Format::Json) {
    Json trials = Json::array();
    for (const TrialStats& s : r.per_trial) {
      trials.push_back({to_decimal(s.mean_abs_error_mm, 6), to_decimal(s.max_abs_error_mm, 6)});
    }
    Json j;
    j["rod"] = index.rod().name;
    j["epsilon_mm"] = to_mixed(r.epsilon_mm);
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["targets"] = targets.size();
    j["nominal_mean_abs_error_mm"] = to_decimal(r.nominal.mean_abs_error_mm, 6);
    j["mean_abs_error_mm"] = to_decimal(r.mean_abs_error_mm, 6);
    j["max_abs_error_mm"] = to_decimal(r.max_abs_error_mm, 6);
    j["mean_extra_error_mm"] = to_decimal(r.mean_extra_error_mm(), 6);
    j["per_trial"] = std::move(trials);
    write_output(opt, j.dump() + "\n", out);
    return 0;
  }
  write_output(opt, perturb_csv(r), out);
  if (opt.out_path) {
    out << "nominal mean |error|: " << to_decimal(r.nominal.mean_abs_error_mm, 6) << " mm\n"
        << "perturbed mean |error|: " << to_decimal(r.mean_abs_error_mm, 6) << " mm\n"
        << "mean extra |error|: " << to_decimal(r.mean_extra_error_mm(), 6) << " mm\n"
        << "max |error|: " << to_decimal(r.max_abs_error_mm, 6) << " mm\n";
  }
  return 0;
}

int cmd_compare(const Options& opt, Format fmt, std::ostream& out) {
  const RodSpec a = resolve_rod(opt.rod);
  const RodSpec b = resolve_rod(opt.other);
  std::pair<Rational, Rational> range = {Rational(0), Rational(std::min(a.finger_count, b.finger_count))};
  if (opt.range) range = parse_range(opt.range, a);
  const Comparison c = compare(a, b, range.first, range.second);
  const std::string winner = c.dominance == Dominance::First    ? c.first_name
                             : c.dominance == Dominance::Second ? c.second_name
                                                                : "tie";
  if (fmt == Format::Json) {
    Json j;
    j["first"] = gap_json(c.first);
    j["first"]["rod"] = c.first_name;
    j["second"] = gap_json(c.second);
    j["second"]["rod"] = c.second_name;
    j["dominance"] = std::string(to_string(c.dominance));
    j["dominant"] = winner;
    out << j.dump() << '\n';
  } else {
    out << c.first_name << ":\n";
    gap_text(c.first, a, out, "  ");
    out << c.second_name << ":\n";
    gap_text(c.second, b, out, "  ");
    out << "dominant: " << winner << '\n';
  }
  return 0;
}

int cmd_convert(const Options& opt, Format fmt, std::ostream& out) {
  const auto from = parse_unit(opt.from);
  const auto to = parse_unit(opt.to);
  if (!from) throw PreconditionError("unknown unit '" + opt.from + "'");
  if (!to) throw PreconditionError("unknown unit '" + opt.to + "'");
  std::optional<Rational> finger_mm;
  if (opt.finger_mm) {
    finger_mm = parse_quantity(*opt.finger_mm);
  } else if (*from == Unit::Millimeter || *to == Unit::Millimeter) {
    finger_mm = resolve_rod(opt.rod).finger_length_mm;
  }
  const Rational v = convert(parse_quantity(opt.value), *from, *to, finger_mm);
  if (fmt == Format::Json) {
    Json j;
    j["value"] = to_mixed(v);
    j["unit"] = std::string(unit_name(*to));
    j["decimal"] = to_decimal(v, 6);
    out << j.dump() << '\n';
  } else {
    out << to_mixed(v) << '\n';
  }
  return 0;
}

int cmd_rods_list(Format fmt, std::ostream& out) {
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const RodSpec& r : builtin_rods()) {
      arr.push_back({{"name", r.name},
                     {"finger_count", r.finger_count},
                     {"finger_length_mm", to_mixed(r.finger_length_mm)}});
    }
    out << arr.dump() << '\n';
  } else {
    for (const RodSpec& r : builtin_rods()) {
      out << r.name << ": " << r.finger_count << " fingers of "
          << to_decimal(r.finger_length_mm, 2) << " mm, " << r.subdivisions.size()
          << " subdivided\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Graduated measuring rods with exact fractions", "cubit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--rod", opt.rod, "Built-in rod (royal, short, gudea) or rod-spec file");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* measure = app.add_subcommand("measure", "Best reading for a length");
  auto* len_mm = measure->add_option("--length-mm", opt.length_mm, "Length in millimeters");
  auto* len_f = measure->add_option("--length-fingers", opt.length_fingers, "Length in fingers");
  len_mm->excludes(len_f);
  measure->add_flag("--compose", opt.compose, "Lay whole rods first for long lengths");

  auto* draw_cmd = app.add_subcommand("draw", "Alignment that traces a reading");
  draw_cmd->add_option("--reading", opt.reading, "Reading such as \"2 4/5\"")->required();

  auto* decompose = app.add_subcommand("decompose", "Egyptian unit-fraction notation");
  decompose->add_option("--value", opt.value, "Nonnegative value")->required();
  decompose->add_option("--strategy", opt.strategy, "greedy, two-thirds or horus")
      ->check(CLI::IsMember({"greedy", "two-thirds", "horus"}));

  auto* analyze = app.add_subcommand("analyze", "Precision analysis");
  analyze->require_subcommand(1);
  analyze->fallthrough();
  auto* gaps = analyze->add_subcommand("gaps", "Largest gap between achievable values");
  gaps->add_option("--range", opt.range, "lo:hi in fingers");
  auto* sweep_cmd = analyze->add_subcommand("sweep", "Error at evenly spaced targets");
  sweep_cmd->add_option("--range", opt.range, "lo:hi in fingers");
  sweep_cmd->add_option("--step", opt.step, "Target spacing in fingers");
  sweep_cmd->add_option("--out", opt.out_path, "Write CSV here instead of stdout");
  auto* perturb_cmd = analyze->add_subcommand("perturb", "Monte Carlo incision noise");
  perturb_cmd->add_option("--epsilon-mm", opt.epsilon_mm, "Max incision displacement (mm)");
  perturb_cmd->add_option("--trials", opt.trials, "Number of trials");
  perturb_cmd->add_option("--seed", opt.seed, "RNG seed");
  perturb_cmd->add_option("--range", opt.range, "lo:hi target range in fingers");
  perturb_cmd->add_option("--step", opt.step, "Target spacing in fingers");
  perturb_cmd->add_option("--target", opt.targets, "Explicit target (repeatable)");
  perturb_cmd->add_option("--out", opt.out_path, "Write CSV here instead of stdout");
  auto* compare_cmd = analyze->add_subcommand("compare", "Compare two rods");
  compare_cmd->add_option("--other", opt.other, "Second rod")->required();
  compare_cmd->add_option("--range", opt.range, "lo:hi in fingers of each rod");

  auto* convert_cmd = app.add_subcommand("convert", "Exact unit conversion");
  convert_cmd->add_option("--value", opt.value, "Value")->required();
  convert_cmd->add_option("--from", opt.from, "Source unit")->required();
  convert_cmd->add_option("--to", opt.to, "Target unit")->required();
  convert_cmd->add_option("--finger-mm", opt.finger_mm, "Finger width for millimeters");

  auto* rods = app.add_subcommand("rods", "Built-in rods");
  rods->require_subcommand(1);
  rods->fallthrough();
  auto* rods_list = rods->add_subcommand("list", "List built-in rods");
  auto* rods_show = rods->add_subcommand("show", "Print a rod-spec document");
  rods_show->add_option("name", opt.show_name, "Rod name or spec file (default --rod)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "cubit: " << e.what() << '\n';
    return 2;
  }

  const Format fmt = opt.format == "json"  ? Format::Json
                     : opt.format == "csv" ? Format::Csv
                                           : Format::Text;
  try {
    if (*measure) return cmd_measure(opt, fmt, out);
    if (*draw_cmd) return cmd_draw(opt, fmt, out);
    if (*decompose) return cmd_decompose(opt, fmt, out);
    if (*gaps) return cmd_gaps(opt, fmt, out);
    if (*sweep_cmd) return cmd_sweep(opt, fmt, out);
    if (*perturb_cmd) return cmd_perturb(opt, fmt, out);
    if (*compare_cmd) return cmd_compare(opt, fmt, out);
    if (*convert_cmd) return cmd_convert(opt, fmt, out);
    if (*rods_list) return cmd_rods_list(fmt, out);
    if (*rods_show) {
      out << to_document(resolve_rod(opt.show_name.empty() ? opt.rod : opt.show_name))
          << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    err << "cubit: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace cubit
