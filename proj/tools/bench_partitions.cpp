// Compares the serial partition counter against the OpenMP-parallel one on
// growing ground sets and checks that both report the same totals.
//
//   ncpath_bench [max_n] [k]     defaults: max_n = 12, k = 2

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ncpath/partitions.hpp"

using ncpath::count_nc;
using ncpath::count_nc_serial;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(end - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t max_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 12;
  long k = argc > 2 ? std::strtol(argv[2], nullptr, 10) : 2;

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both columns run the serial counter\n");
#endif
  std::printf("%4s %12s %12s %12s %8s %s\n", "n", "count", "serial[s]", "parallel[s]",
              "speedup", "match");

  bool all_match = true;
  for (std::size_t n = 8; n <= max_n; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t serial = count_nc_serial(k, n, max_n);
    double ts = seconds_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    std::uint64_t parallel = count_nc(k, n, max_n);
    double tp = seconds_since(t1);

    bool match = serial == parallel;
    all_match = all_match && match;
    std::printf("%4zu %12llu %12.4f %12.4f %8.2f %s\n", n,
                static_cast<unsigned long long>(serial), ts, tp,
                tp > 0 ? ts / tp : 0.0, match ? "yes" : "NO");
  }
  return all_match ? 0 : 1;
}
