#include <algorithm>
#include <stdexcept>

#include "lensband/classify.hpp"

namespace lensband {

namespace {

ScanSummary summarize(std::int64_t lo, std::int64_t hi,
                      const std::vector<ObstructionReport>& reports) {
  ScanSummary s;
  s.lo = lo;
  s.hi = hi;
  for (const ObstructionReport& r : reports) {
    if (r.verdict == Verdict::NotObstructed) s.not_obstructed.push_back(r.n);
  }
  for (std::int64_t n : realizable_set()) {
    if (n >= lo && n <= hi) s.expected.push_back(n);
  }
  s.matches_expected = s.not_obstructed == s.expected;
  return s;
}

}  // namespace

ScanResult scan(std::int64_t lo, std::int64_t hi, bool parallel) {
  if (lo > hi) throw std::invalid_argument("scan: need lo <= hi");
  std::vector<std::int64_t> ns;
  ns.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (n != 0) ns.push_back(n);
  }

  ScanResult out;
  out.reports.resize(ns.size());
  const std::int64_t count = static_cast<std::int64_t>(ns.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#else
  (void)parallel;
#endif
  for (std::int64_t idx = 0; idx < count; ++idx) {
    out.reports[static_cast<std::size_t>(idx)] = classify(ns[static_cast<std::size_t>(idx)]);
  }

  out.summary = summarize(lo, hi, out.reports);
  return out;
}

ScanResult scan_serial(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("scan_serial: need lo <= hi");
  ScanResult out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (n != 0) out.reports.push_back(classify(n));
  }
  out.summary = summarize(lo, hi, out.reports);
  return out;
}

}  // namespace lensband
