// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "cubit/analysis.hpp"
#include "cubit/egyptian.hpp"
#include "cubit/measurement.hpp"
#include "cubit/rod.hpp"
#include "cubit/text.hpp"
#include "cubit/units.hpp"
#include "oracle.hpp"

using namespace cubit;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<BigInt> dens(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long d : v) out.emplace_back(d);
  return out;
}

Outcome measure_golden() {
  const auto t0 = Clock::now();
  const MeasurementResult m = best_reading(royal_cubit(), Rational(29, 8));
  const std::string notation = render(greedy_decompose(m.reading.value));
  const double ms = ms_since(t0);
  const bool ok = m.reading.whole == 3 && m.reading.fraction == Rational(5, 8) &&
                  m.error_fingers.is_zero() && notation == "3 1/2 1/8" && ms < 10.0;
  std::ostringstream d;
  d << "reading " << format_reading(m.reading) << ", error " << to_mixed(m.error_fingers)
    << ", notation \"" << notation << "\", " << ms << " ms (< 10)";
  return {ok, d.str()};
}

Outcome draw_golden() {
  const RodSpec rod = royal_cubit();
  const Reading target = Reading::of(Rational(2) + Rational(4, 5));
  const Alignment a = draw(rod, target);
  const MeasurementResult back = best_reading(rod, a.measured_value);
  const bool ok = !a.end_mark.is_notch() && a.end_mark.parts == 5 && a.end_mark.index == 4 &&
                  a.measured_value == target.value && back.reading == target &&
                  back.error_fingers.is_zero();
  std::ostringstream d;
  d << "notch " << a.start_notch << " -> incision " << a.end_mark.index << "/"
    << a.end_mark.parts << " on finger " << a.end_mark.finger << ", measures "
    << format_reading(back.reading);
  return {ok, d.str()};
}

Outcome nine_tenths_golden() {
  const Rational r(9, 10);
  const auto hist = egyptian_decompose(r, true);
  const auto greedy = egyptian_decompose(r, false);
  const bool ok = hist.has_two_thirds && hist.unit_denominators == dens({5, 30}) &&
                  !greedy.has_two_thirds && greedy.unit_denominators == dens({2, 3, 15}) &&
                  hist.value() == r && greedy.value() == r &&
                  Rational(2, 3) + Rational(1, 5) + Rational(1, 30) == r &&
                  Rational(1, 2) + Rational(1, 3) + Rational(1, 15) == r;
  return {ok, "two-thirds \"" + render(hist) + "\", greedy \"" + render(greedy) + "\""};
}

Outcome horus_suite() {
  int good = 0;
  for (int k = 0; k < 64; ++k) {
    const auto ds = horus_decompose(Rational(k, 64));
    Rational sum;
    for (int d : ds) sum += Rational(1, d);
    good += sum == Rational(k, 64);
  }
  const bool full = horus_decompose(Rational(63, 64)) == std::vector<int>{2, 4, 8, 16, 32, 64};
  return {good == 64 && full,
          std::to_string(good) + "/64 sums exact, 63/64 -> all six parts: " + (full ? "yes" : "no")};
}

Outcome unit_constants() {
  const Rational finger_mm(75, 4);
  const Rational cubit_mm = Rational(28) * finger_mm;
  const Rational sixteenth_mm = Rational(1, 16) * finger_mm;
  const std::string cm = to_decimal(cubit_mm / 10, 1);
  const std::string mm = to_decimal(sixteenth_mm, 1);
  const bool ok = cubit_mm == Rational(525) && sixteenth_mm == Rational(75, 64) &&
                  to_decimal(sixteenth_mm, 6) == "1.171875" && cm == "52.5" && mm == "1.2" &&
                  convert(Rational(1), Unit::RoyalCubit, Unit::Millimeter, finger_mm) == cubit_mm;
  return {ok, "royal cubit " + to_mixed(cubit_mm) + " mm (" + cm + " cm), 1/16 finger " +
                  to_fraction(sixteenth_mm) + " = " + to_decimal(sixteenth_mm, 6) + " mm (" +
                  mm + " mm)"};
}

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  const RodIndex idx(royal_cubit());
  const auto brute =
      oracle::to_rationals(oracle::achievable(28, oracle::royal_subdivisions()));
  std::mt19937_64 rng(0xACCE97);
  int mismatches = 0;
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    const long den = std::uniform_int_distribution<long>(1, 1000)(rng);
    const long num = std::uniform_int_distribution<long>(0, 28 * den)(rng);
    const Rational t(num, den);
    mismatches += abs(idx.best_reading(t).error_fingers) != oracle::min_distance(brute, t);
  }
  const double ms = ms_since(t0);
  return {mismatches == 0 && ms < 5000.0,
          std::to_string(n) + " targets, " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(ms) + " ms (< 5000)"};
}

Outcome gap_attainment() {
  const RodIndex idx(royal_cubit());
  const GapReport g = gap_analysis(idx, Rational(0), Rational(1));
  const Rational mid = (g.max_gap_location.first + g.max_gap_location.second) / 2;
  const Rational attained = abs(idx.best_reading(mid).error_fingers);
  return {g.worst_case_error == Rational(1, 32) && attained == Rational(1, 32),
          "worst_case_error " + to_mixed(g.worst_case_error) + ", midpoint " + to_mixed(mid) +
              " attains " + to_mixed(attained)};
}

Outcome mirror_invariance() {
  const auto t0 = Clock::now();
  const RodSpec royal = royal_cubit();
  const auto a = achievable_values(royal);
  const auto b = achievable_values(mirror(royal));
  const double ms = ms_since(t0);
  return {a == b && ms < 1000.0,
          std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " values, equal: " +
              (a == b ? "yes" : "no") + ", " + std::to_string(ms) + " ms (< 1000)"};
}

Outcome reproducibility() {
  const RodIndex idx(royal_cubit());
  const auto targets = sweep_targets(Rational(0), Rational(28), Rational(3, 37));
  const Rational eps(1, 10);
  omp_set_num_threads(4);
  const std::string run1 = perturb_csv(perturb(idx, eps, 200, 42, targets));
  const std::string run2 = perturb_csv(perturb(idx, eps, 200, 42, targets));
  const std::string serial = perturb_csv(reference::perturb(idx, eps, 200, 42, targets));

  const auto zero = perturb(idx, Rational(0), 5, 42, targets);
  const auto nominal = sweep(idx, Rational(0), Rational(28), Rational(3, 37));
  Rational mean, max;
  for (const SweepRecord& r : nominal) {
    mean += abs(r.error_mm);
    max = std::max(max, abs(r.error_mm));
  }
  mean /= Rational(static_cast<long>(nominal.size()));
  bool zero_ok = true;
  for (const TrialStats& s : zero.per_trial) {
    zero_ok = zero_ok && s.mean_abs_error_mm == mean && s.max_abs_error_mm == max;
  }
  const bool ok = run1 == run2 && run1 == serial && zero_ok;
  return {ok, std::string("runs identical: ") + (run1 == run2 ? "yes" : "no") +
                  ", serial == parallel: " + (run1 == serial ? "yes" : "no") +
                  ", epsilon 0 == sweep: " + (zero_ok ? "yes" : "no")};
}

Outcome codec_round_trips() {
  std::mt19937_64 rng(0xC0DEC);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 100000);
  int cases = 0, failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const Rational r(num(rng), den(rng));
    failures += parse_quantity(to_fraction(r)) != r;
    failures += parse_quantity(to_mixed(r)) != r;
    const Reading reading = Reading::of(abs(r));
    failures += !(parse_reading(format_reading(reading)) == reading);
    for (bool two_thirds : {false, true}) {
      const UnitFractionSum s = egyptian_decompose(abs(r), two_thirds);
      failures += !(parse_notation(render(s)) == s);
    }
    cases += 5;
  }
  return {failures == 0, std::to_string(cases) + " round trips, " + std::to_string(failures) +
                             " failures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 measure 3 5/8", measure_golden},
      {"2 draw 2 4/5", draw_golden},
      {"3 nine tenths", nine_tenths_golden},
      {"4 horus suite", horus_suite},
      {"5 unit constants", unit_constants},
      {"6 oracle equivalence", oracle_equivalence},
      {"7 gap bound attainment", gap_attainment},
      {"8 mirror invariance", mirror_invariance},
      {"9 reproducibility", reproducibility},
      {"10 codec round trips", codec_round_trips},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  %-24s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
