// Serial reference vs OpenMP drivers for the analysis kernels.
//
//   bench_analysis [trials] [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "cubit/analysis.hpp"
#include "cubit/rod.hpp"

using namespace cubit;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const int trials = argc > 1 ? std::atoi(argv[1]) : 200;
  if (argc > 2) omp_set_num_threads(std::atoi(argv[2]));
  std::printf("threads: %d\n", omp_get_max_threads());

  for (const RodSpec& rod : builtin_rods()) {
    const RodIndex index(rod);
    const Rational step(1, 64);
    std::vector<SweepRecord> a, b;
    const double sweep_serial =
        time_ms([&] { a = reference::sweep(index, Rational(0), rod.length_fingers(), step); });
    const double sweep_parallel =
        time_ms([&] { b = sweep(index, Rational(0), rod.length_fingers(), step); });

    const auto targets = sweep_targets(Rational(0), rod.length_fingers(), Rational(1, 4));
    std::string csv_serial, csv_parallel;
    const double perturb_serial = time_ms([&] {
      csv_serial = perturb_csv(reference::perturb(index, Rational(1, 10), trials, 7, targets));
    });
    const double perturb_parallel = time_ms([&] {
      csv_parallel = perturb_csv(perturb(index, Rational(1, 10), trials, 7, targets));
    });

    std::printf("%-12s sweep   %5zu records  serial %9.2f ms  parallel %9.2f ms  x%.2f  %s\n",
                rod.name.c_str(), a.size(), sweep_serial, sweep_parallel,
                sweep_serial / sweep_parallel, a == b ? "match" : "MISMATCH");
    std::printf("%-12s perturb %5d trials   serial %9.2f ms  parallel %9.2f ms  x%.2f  %s\n",
                rod.name.c_str(), trials, perturb_serial, perturb_parallel,
                perturb_serial / perturb_parallel,
                csv_serial == csv_parallel ? "match" : "MISMATCH");
  }
  return 0;
}
