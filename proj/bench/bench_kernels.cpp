// Serial reference vs OpenMP kernels. Usage: bench_kernels [threads]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "hyperclique/fact1.hpp"
#include "hyperclique/search.hpp"

using namespace hyperclique;

namespace {

double seconds(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %10.3f %10.3f %8.2fx  %s\n", name, serial, parallel, serial / parallel, same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  std::printf("threads %d\n%-28s %10s %10s %9s\n", threads, "kernel", "serial s", "omp s", "speedup");

  for (auto [n, k] : {std::pair{6, 2}, std::pair{7, 2}, std::pair{6, 3}}) {
    const ShardRange all{0, edge_set_count(n, k)};
    SearchResult s, p;
    double ts = seconds([&] { s = scan_range_serial(n, k, all); });
    double tp = seconds([&] { p = scan_range(n, k, all, threads); });
    char name[64];
    std::snprintf(name, sizeof name, "exhaustive g(%d,%d)", n, k);
    row(name, ts, tp, s == p);
  }

  for (int k = 2; k <= 4; ++k) {
    Fact1Stats s, p;
    double ts = seconds([&] { s = fact1_trials_serial(k, 12, 20000, 1); });
    double tp = seconds([&] { p = fact1_trials(k, 12, 20000, 1, threads); });
    char name[64];
    std::snprintf(name, sizeof name, "fact1 k=%d n=12 x20000", k);
    row(name, ts, tp, s == p);
  }
  return 0;
}
