// Benchmark: serial census versus the OpenMP-parallel census over
// generation subtrees, with a result equality check.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "d2c/enumerate.hpp"

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 8;
  if (n < 1 || n > 11) {
    std::cerr << "usage: bench_census [n in 1..11]\n";
    return 2;
  }

  using clock = std::chrono::steady_clock;

  auto t0 = clock::now();
  d2c::SearchReport serial = d2c::census(n);
  auto t1 = clock::now();
  d2c::SearchReport parallel = d2c::census_parallel(n);
  auto t2 = clock::now();

  auto ms = [](auto a, auto b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  };
  double ts = ms(t0, t1), tp = ms(t1, t2);
  std::cout << "n = " << n << ", classes = " << serial.counts.total_graphs
            << ", d2c = " << serial.counts.d2c << "\n";
  std::cout << "serial:   " << ts << " ms\n";
  std::cout << "parallel: " << tp << " ms  (speedup " << ts / tp << "x)\n";

  if (!(serial == parallel)) {
    std::cout << "MISMATCH between serial and parallel reports\n";
    return 1;
  }
  std::cout << "reports identical\n";
  return 0;
}
