#include "cubit/analysis.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "analysis_common.hpp"
#include "cubit/error.hpp"
#include "cubit/text.hpp"

namespace cubit {
namespace detail {

void check_range(const RodSpec& rod, const Rational& lo, const Rational& hi,
                 bool allow_empty) {
  const bool ok = lo.sign() >= 0 && hi <= rod.length_fingers() &&
                  (allow_empty ? lo <= hi : lo < hi);
  if (!ok) {
    throw PreconditionError("range " + to_mixed(lo) + ":" + to_mixed(hi) +
                            " is not inside 0:" + std::to_string(rod.finger_count) +
                            " with lo " + (allow_empty ? "<=" : "<") + " hi");
  }
}

SweepRecord sweep_record(const RodIndex& index, const Rational& target) {
  const MeasurementResult m = index.best_reading(target);
  return {target, m.reading.value, m.error_fingers, m.error_mm};
}

void check_perturb_args(const RodIndex& index, const Rational& epsilon_mm,
                        int trials, const std::vector<Rational>& targets) {
  if (epsilon_mm.sign() < 0) throw PreconditionError("epsilon_mm must be >= 0");
  if (trials < 1) throw PreconditionError("trials must be >= 1");
  if (targets.empty()) throw PreconditionError("perturb needs at least one target");
  for (const Rational& t : targets) {
    if (t.sign() < 0 || t > index.rod().length_fingers()) {
      throw PreconditionError("perturb target " + to_mixed(t) + " is off the rod");
    }
  }
}

TrialStats stats_of(const std::vector<Rational>& errors_mm) {
  TrialStats s;
  for (const Rational& e : errors_mm) {
    const Rational a = abs(e);
    s.mean_abs_error_mm += a;
    if (a > s.max_abs_error_mm) s.max_abs_error_mm = a;
  }
  s.mean_abs_error_mm /= Rational(static_cast<long>(errors_mm.size()));
  return s;
}

TrialStats trial_stats(const RodIndex& index, const Rational& epsilon_fingers,
                       std::uint64_t seed, int trial,
                       const std::vector<Rational>& targets) {
  const auto positions = perturbed_positions(index, epsilon_fingers, seed, trial);
  return stats_of(perturbed_errors_mm(index, positions, targets));
}

PerturbationReport assemble(const RodIndex& index, const Rational& epsilon_mm,
                            int trials, std::uint64_t seed,
                            const std::vector<Rational>& targets,
                            std::vector<TrialStats> per_trial) {
  PerturbationReport r;
  r.epsilon_mm = epsilon_mm;
  r.trials = trials;
  r.seed = seed;
  r.targets = targets;
  std::vector<Rational> nominal;
  nominal.reserve(targets.size());
  for (const Rational& t : targets) nominal.push_back(index.best_reading(t).error_mm);
  r.nominal = stats_of(nominal);
  for (const TrialStats& s : per_trial) {
    r.mean_abs_error_mm += s.mean_abs_error_mm;
    if (s.max_abs_error_mm > r.max_abs_error_mm) r.max_abs_error_mm = s.max_abs_error_mm;
  }
  r.mean_abs_error_mm /= Rational(static_cast<long>(per_trial.size()));
  r.per_trial = std::move(per_trial);
  return r;
}

}  // namespace detail

GapReport gap_analysis(const RodIndex& index, const Rational& lo, const Rational& hi) {
  detail::check_range(index.rod(), lo, hi, false);
  const auto& values = index.values();
  const auto first = std::lower_bound(values.begin(), values.end(), lo);
  const auto last = std::upper_bound(values.begin(), values.end(), hi);
  if (first == last) {
    throw PreconditionError("no achievable value in " + to_mixed(lo) + ":" + to_mixed(hi));
  }
  GapReport g;
  g.lo = lo;
  g.hi = hi;
  g.value_count = static_cast<std::size_t>(last - first);
  g.max_gap_location = {*first, *first};
  for (auto it = first; std::next(it) != last; ++it) {
    const Rational gap = *std::next(it) - *it;
    if (gap > g.max_gap) {
      g.max_gap = gap;
      g.max_gap_location = {*it, *std::next(it)};
    }
  }
  g.worst_case_error = g.max_gap / 2;
  return g;
}

GapReport gap_analysis(const RodSpec& rod, const Rational& lo, const Rational& hi) {
  return gap_analysis(RodIndex(rod), lo, hi);
}

std::vector<Rational> sweep_targets(const Rational& lo, const Rational& hi,
                                    const Rational& step) {
  if (step.sign() <= 0) throw PreconditionError("sweep step must be positive");
  std::vector<Rational> out;
  for (Rational t = lo; t <= hi; t += step) out.push_back(t);
  return out;
}

std::vector<SweepRecord> sweep(const RodIndex& index, const Rational& lo,
                               const Rational& hi, const Rational& step) {
  detail::check_range(index.rod(), lo, hi, true);
  const std::vector<Rational> targets = sweep_targets(lo, hi, step);
  std::vector<SweepRecord> out(targets.size());
  const auto n = static_cast<long>(targets.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        detail::sweep_record(index, targets[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<SweepRecord> sweep(const RodSpec& rod, const Rational& lo,
                               const Rational& hi, const Rational& step) {
  return sweep(RodIndex(rod), lo, hi, step);
}

std::uint32_t noise_word(std::uint64_t seed, std::uint64_t trial, std::uint64_t mark) {
  // splitmix64 finalizer applied to each key component in turn
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t x = mix(seed);
  x = mix(x ^ trial);
  x = mix(x ^ (mark * 0xd6e8feb86659fd93ULL));
  return static_cast<std::uint32_t>(x >> 32);
}

std::vector<Rational> perturbed_positions(const RodIndex& index,
                                          const Rational& epsilon_fingers,
                                          std::uint64_t seed, int trial) {
  const auto& marks = index.marks();
  std::vector<Rational> pos;
  pos.reserve(marks.size());
  const Rational full(BigInt(0xffffffffUL));
  // (finger, parts) -> last perturbed incision of that scale
  std::map<std::pair<int, int>, Rational> last;
  for (std::size_t k = 0; k < marks.size(); ++k) {
    const Mark& m = marks[k];
    if (m.is_notch() || epsilon_fingers.is_zero()) {
      pos.push_back(m.position);
      continue;
    }
    const Rational u(BigInt(static_cast<unsigned long>(noise_word(
        seed, static_cast<std::uint64_t>(trial), k))));
    Rational p = m.position + epsilon_fingers * (Rational(2) * u - full) / full;
    p = std::clamp(p, Rational(m.finger - 1), Rational(m.finger));
    auto [it, inserted] = last.try_emplace({m.finger, m.parts}, p);
    if (!inserted) {
      if (p <= it->second) {
        throw PerturbationError(
            "trial " + std::to_string(trial) + ": incisions of the " +
            std::to_string(m.parts) + "-part scale on finger " +
            std::to_string(m.finger) + " lost their order; reduce epsilon");
      }
      it->second = p;
    }
    pos.push_back(std::move(p));
  }
  return pos;
}

std::vector<Rational> perturbed_errors_mm(const RodIndex& index,
                                          const std::vector<Rational>& positions,
                                          const std::vector<Rational>& targets) {
  const auto& marks = index.marks();
  const RodSpec& rod = index.rod();

  // Work in integers over a common denominator; exact, and much cheaper to
  // sort than canonicalizing rationals.
  BigInt scale = 1;
  for (std::size_t k = 0; k < marks.size(); ++k) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), positions[k].mpq().get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), marks[k].position.mpq().get_den_mpz_t());
  }
  auto scaled = [&scale](const Rational& r) {
    return BigInt(r.numerator() * (scale / r.denominator()));
  };
  std::vector<BigInt> physical_pos, nominal_pos;
  for (std::size_t k = 0; k < marks.size(); ++k) {
    physical_pos.push_back(scaled(positions[k]));
    nominal_pos.push_back(scaled(marks[k].position));
  }

  struct Pair {
    BigInt physical;
    BigInt nominal;
  };
  std::vector<Pair> pairs;
  pairs.reserve(marks.size() * static_cast<std::size_t>(rod.finger_count + 1));
  for (int a = 0; a <= rod.finger_count; ++a) {
    const BigInt notch = scale * a;
    for (std::size_t k = 0; k < marks.size(); ++k) {
      pairs.push_back({::abs(physical_pos[k] - notch), ::abs(nominal_pos[k] - notch)});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
    const int c = cmp(x.physical, y.physical);
    return c != 0 ? c < 0 : x.nominal < y.nominal;
  });

  const Rational scale_q(scale);
  std::vector<Rational> errors;
  errors.reserve(targets.size());
  for (const Rational& t : targets) {
    const mpq_class ts = (t * scale_q).mpq();
    auto it = std::lower_bound(pairs.begin(), pairs.end(), ts,
                               [](const Pair& p, const mpq_class& v) {
                                 return cmp(p.physical, v) < 0;
                               });
    if (it == pairs.end() ||
        (it != pairs.begin() &&
         !(mpq_class(it->physical) - ts < ts - mpq_class(std::prev(it)->physical)))) {
      // the closer (or equally close, smaller) physical distance lies below t;
      // step to the first pair at that distance, which has the least nominal
      const BigInt below = std::prev(it)->physical;
      it = std::lower_bound(pairs.begin(), pairs.end(), below,
                            [](const Pair& p, const BigInt& v) { return p.physical < v; });
    }
    errors.push_back((Rational(it->nominal, scale) - t) * rod.finger_length_mm);
  }
  return errors;
}

PerturbationReport perturb(const RodIndex& index, const Rational& epsilon_mm,
                           int trials, std::uint64_t seed,
                           const std::vector<Rational>& targets) {
  detail::check_perturb_args(index, epsilon_mm, trials, targets);
  const Rational eps_f = epsilon_mm / index.rod().finger_length_mm;
  std::vector<TrialStats> per_trial(static_cast<std::size_t>(trials));
  std::vector<std::optional<std::string>> failures(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    const auto slot = static_cast<std::size_t>(t);
    try {
      per_trial[slot] = detail::trial_stats(index, eps_f, seed, t, targets);
    } catch (const PerturbationError& e) {
      failures[slot] = e.what();
    }
  }
  // Report the lowest failing trial, as the serial loop would.
  for (const auto& f : failures) {
    if (f) throw PerturbationError(*f);
  }
  return detail::assemble(index, epsilon_mm, trials, seed, targets, std::move(per_trial));
}

PerturbationReport perturb(const RodSpec& rod, const Rational& epsilon_mm,
                           int trials, std::uint64_t seed,
                           const std::vector<Rational>& targets) {
  return perturb(RodIndex(rod), epsilon_mm, trials, seed, targets);
}

std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::First: return "first";
    case Dominance::Second: return "second";
    case Dominance::Tie: return "tie";
  }
  return "?";
}

Comparison compare(const RodSpec& a, const RodSpec& b, const Rational& lo,
                   const Rational& hi) {
  Comparison c;
  c.first_name = a.name;
  c.second_name = b.name;
  c.first = gap_analysis(a, lo, hi);
  c.second = gap_analysis(b, lo, hi);
  if (c.first.worst_case_error < c.second.worst_case_error) {
    c.dominance = Dominance::First;
  } else if (c.second.worst_case_error < c.first.worst_case_error) {
    c.dominance = Dominance::Second;
  }
  return c;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << "target,reading,error_fingers,error_mm\n";
  for (const SweepRecord& r : records) {
    out << to_decimal(r.target, 6) << ',' << to_mixed(r.reading_value) << ','
        << to_decimal(r.error_fingers, 6) << ',' << to_decimal(r.error_mm, 6) << '\n';
  }
  return out.str();
}

std::string perturb_csv(const PerturbationReport& report) {
  std::ostringstream out;
  out << "trial,mean_abs_error_mm,max_abs_error_mm\n";
  for (std::size_t t = 0; t < report.per_trial.size(); ++t) {
    out << t << ',' << to_decimal(report.per_trial[t].mean_abs_error_mm, 6) << ','
        << to_decimal(report.per_trial[t].max_abs_error_mm, 6) << '\n';
  }
  return out.str();
}

}  // namespace cubit
