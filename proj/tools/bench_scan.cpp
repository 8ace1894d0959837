// Compares the OpenMP scan kernel against the serial reference on the same
// range, clearing the d-invariant memo before each timed run.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>

#include "lensband/classify.hpp"
#include "lensband/lens.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<lensband::ScanResult()>& fn, lensband::ScanResult& out) {
  lensband::clear_d_invariant_cache();
  auto t0 = Clock::now();
  out = fn();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t lo = -2000;
  std::int64_t hi = 2000;
  if (argc == 3) {
    lo = std::stoll(argv[1]);
    hi = std::stoll(argv[2]);
  } else if (argc != 1) {
    std::cerr << "usage: bench_scan [lo hi]\n";
    return 2;
  }

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled; both runs are serial\n";
#endif
  std::cout << "range: [" << lo << ", " << hi << "]\n";

  lensband::ScanResult serial_result;
  double serial_ms = time_ms([&] { return lensband::scan_serial(lo, hi); }, serial_result);
  std::cout << "serial reference: " << serial_ms << " ms\n";

  lensband::ScanResult parallel_result;
  double parallel_ms = time_ms([&] { return lensband::scan(lo, hi, true); }, parallel_result);
  std::cout << "parallel kernel:  " << parallel_ms << " ms\n";

  bool agree = serial_result.summary.not_obstructed == parallel_result.summary.not_obstructed &&
               serial_result.reports.size() == parallel_result.reports.size();
  std::cout << "results agree: " << (agree ? "yes" : "NO") << "\n";
  std::cout << "speedup: " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
  return agree ? 0 : 1;
}
