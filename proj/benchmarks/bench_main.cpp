// Compares the serial reference kernels against the OpenMP versions.
// --quick shrinks the problem sizes so the smoke test stays fast.

#include "periodlab/catalog.hpp"
#include "periodlab/one_mismatch.hpp"

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace periodlab;

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_seconds(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void print_row(const std::string& name, double serial, double parallel, bool identical) {
  std::cout.precision(3);
  std::cout << std::fixed << name << ": serial=" << serial << "s parallel=" << parallel
            << "s speedup=" << (parallel > 0 ? serial / parallel : 0.0)
            << (identical ? " outputs=identical" : " outputs=DIVERGED") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  int threads = 4;
#ifdef _OPENMP
  threads = omp_get_max_threads();
  if (threads < 2) threads = 2;
#endif
  std::cout << "threads=" << threads << (quick ? " (quick sizes)" : "") << "\n";

  int divergences = 0;

  {
    const int n = quick ? 12 : 22;
    Catalog serial_cat;
    Catalog parallel_cat;
    const double serial = time_seconds([&] { serial_cat = enumerate_catalog_serial(n, 2); });
    const double parallel = time_seconds([&] { parallel_cat = enumerate_catalog(n, 2, threads); });
    const bool same = serial_cat == parallel_cat;
    if (!same) ++divergences;
    print_row("catalog n=" + std::to_string(n) + " binary", serial, parallel, same);
  }

  {
    const int n_max = quick ? 10 : 16;
    OneMismatchReport serial_report;
    OneMismatchReport parallel_report;
    const double serial =
        time_seconds([&] { serial_report = verify_one_mismatch_exhaustive_serial(n_max, 2); });
    const double parallel =
        time_seconds([&] { parallel_report = verify_one_mismatch_exhaustive(n_max, 2, threads); });
    const bool same = serial_report == parallel_report;
    if (!same) ++divergences;
    print_row("one-mismatch sweep n<=" + std::to_string(n_max) + " binary", serial, parallel,
              same);
  }

  {
    const int n_max = quick ? 24 : 100;
    WalkSweepReport serial_report;
    WalkSweepReport parallel_report;
    const double serial = time_seconds([&] { serial_report = sweep_walks_serial(n_max); });
    const double parallel = time_seconds([&] { parallel_report = sweep_walks(n_max, threads); });
    const bool same = serial_report == parallel_report;
    if (!same) ++divergences;
    print_row("walk sweep n<=" + std::to_string(n_max), serial, parallel, same);
  }

  if (divergences > 0) {
    std::cout << divergences << " benchmark(s) diverged between serial and parallel\n";
    return 1;
  }
  return 0;
}
