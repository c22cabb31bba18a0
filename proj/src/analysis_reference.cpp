// Serial drivers; the OpenMP versions in analysis.cpp must match these.

#include "analysis_common.hpp"
#include "cubit/analysis.hpp"

namespace cubit::reference {

std::vector<SweepRecord> sweep(const RodIndex& index, const Rational& lo,
                               const Rational& hi, const Rational& step) {
  detail::check_range(index.rod(), lo, hi, true);
  std::vector<SweepRecord> out;
  for (const Rational& t : sweep_targets(lo, hi, step)) {
    out.push_back(detail::sweep_record(index, t));
  }
  return out;
}

PerturbationReport perturb(const RodIndex& index, const Rational& epsilon_mm,
                           int trials, std::uint64_t seed,
                           const std::vector<Rational>& targets) {
  detail::check_perturb_args(index, epsilon_mm, trials, targets);
  const Rational eps_f = epsilon_mm / index.rod().finger_length_mm;
  std::vector<TrialStats> per_trial;
  for (int t = 0; t < trials; ++t) {
    per_trial.push_back(detail::trial_stats(index, eps_f, seed, t, targets));
  }
  return detail::assemble(index, epsilon_mm, trials, seed, targets, std::move(per_trial));
}

}  // namespace cubit::reference
