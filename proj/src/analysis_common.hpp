#pragma once

// Per-record and per-trial kernels shared by the serial and OpenMP drivers.

#include <string>
#include <vector>

#include "cubit/analysis.hpp"

namespace cubit::detail {

void check_range(const RodSpec& rod, const Rational& lo, const Rational& hi,
                 bool allow_empty);
SweepRecord sweep_record(const RodIndex& index, const Rational& target);

void check_perturb_args(const RodIndex& index, const Rational& epsilon_mm,
                        int trials, const std::vector<Rational>& targets);
TrialStats trial_stats(const RodIndex& index, const Rational& epsilon_fingers,
                       std::uint64_t seed, int trial,
                       const std::vector<Rational>& targets);
TrialStats stats_of(const std::vector<Rational>& errors_mm);
PerturbationReport assemble(const RodIndex& index, const Rational& epsilon_mm,
                            int trials, std::uint64_t seed,
                            const std::vector<Rational>& targets,
                            std::vector<TrialStats> per_trial);

}  // namespace cubit::detail
