#pragma once

// Precision of a rod design: gaps between achievable values, error sweeps
// over target lengths, Monte Carlo incision noise and rod comparisons.
//
// sweep() and perturb() run their records/trials with OpenMP. The serial
// versions in cubit::reference are the baseline the parallel ones are
// tested against; both must agree bit for bit.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cubit/measurement.hpp"
#include "cubit/rational.hpp"
#include "cubit/rod.hpp"

namespace cubit {

struct GapReport {
  Rational lo, hi;
  Rational max_gap;
  std::pair<Rational, Rational> max_gap_location;  // first widest pair
  Rational worst_case_error;                       // max_gap / 2
  std::size_t value_count = 0;
};

GapReport gap_analysis(const RodIndex& index, const Rational& lo, const Rational& hi);
GapReport gap_analysis(const RodSpec& rod, const Rational& lo, const Rational& hi);

struct SweepRecord {
  Rational target;
  Rational reading_value;
  Rational error_fingers;
  Rational error_mm;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

// lo, lo + step, ... while <= hi.
std::vector<Rational> sweep_targets(const Rational& lo, const Rational& hi,
                                    const Rational& step);

std::vector<SweepRecord> sweep(const RodIndex& index, const Rational& lo,
                               const Rational& hi, const Rational& step);
std::vector<SweepRecord> sweep(const RodSpec& rod, const Rational& lo,
                               const Rational& hi, const Rational& step);

struct TrialStats {
  Rational mean_abs_error_mm;
  Rational max_abs_error_mm;

  friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

struct PerturbationReport {
  Rational epsilon_mm;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<Rational> targets;
  std::vector<TrialStats> per_trial;
  TrialStats nominal;         // the unperturbed rod on the same targets
  Rational mean_abs_error_mm; // mean over trials of per-trial means
  Rational max_abs_error_mm;  // max over trials

  Rational mean_extra_error_mm() const {
    return mean_abs_error_mm - nominal.mean_abs_error_mm;
  }
};

// Counter-based uniform draw keyed by (seed, trial, mark); returns an
// integer in [0, 2^32 - 1]. Independent of evaluation order.
std::uint32_t noise_word(std::uint64_t seed, std::uint64_t trial, std::uint64_t mark);

// Incision positions of marks() after one trial's displacement, clamped into
// their own finger. Notches are returned unchanged. Throws PerturbationError
// if a scale's incisions stop being strictly increasing.
std::vector<Rational> perturbed_positions(const RodIndex& index,
                                          const Rational& epsilon_fingers,
                                          std::uint64_t seed, int trial);

// Errors (mm) of the nominal readings an observer would take from the
// perturbed rod for each target.
std::vector<Rational> perturbed_errors_mm(const RodIndex& index,
                                          const std::vector<Rational>& positions,
                                          const std::vector<Rational>& targets);

PerturbationReport perturb(const RodIndex& index, const Rational& epsilon_mm,
                           int trials, std::uint64_t seed,
                           const std::vector<Rational>& targets);
PerturbationReport perturb(const RodSpec& rod, const Rational& epsilon_mm,
                           int trials, std::uint64_t seed,
                           const std::vector<Rational>& targets);

enum class Dominance { First, Second, Tie };
std::string_view to_string(Dominance d);

struct Comparison {
  std::string first_name, second_name;
  GapReport first, second;
  Dominance dominance = Dominance::Tie;  // lower worst_case_error (fingers) wins
};

Comparison compare(const RodSpec& a, const RodSpec& b, const Rational& lo,
                   const Rational& hi);

// CSV with the fixed headers; numbers in decimal(6).
std::string sweep_csv(const std::vector<SweepRecord>& records);
std::string perturb_csv(const PerturbationReport& report);

namespace reference {

std::vector<SweepRecord> sweep(const RodIndex& index, const Rational& lo,
                               const Rational& hi, const Rational& step);
PerturbationReport perturb(const RodIndex& index, const Rational& epsilon_mm,
                           int trials, std::uint64_t seed,
                           const std::vector<Rational>& targets);

}  // namespace reference
}  // namespace cubit
