#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lensband/rational.hpp"

namespace lensband {

enum class CheckOutcome { Obstructs, Passes, Inconclusive };

std::string to_string(CheckOutcome o);

/// One executed obstruction check, with the values it computed and the
/// mathematical fact it rests on.
struct CheckRecord {
  std::string name;    // enumerated check tag
  std::string branch;  // "", "+k" or "-k" (the surgery-sign context, |n| = 3k only)
  std::vector<std::pair<std::string, std::string>> inputs;  // rendered values, stable order
  CheckOutcome outcome = CheckOutcome::Inconclusive;
  std::string citation;

  /// "name" or "name[branch]".
  std::string qualified_name() const;
};

enum class Verdict { Obstructed, NotObstructed };

std::string to_string(Verdict v);

/// Full result of running the obstruction pipeline for one n.
struct ObstructionReport {
  std::int64_t n = 0;
  Verdict verdict = Verdict::NotObstructed;
  std::optional<std::string> firing_check;  // qualified name of the first obstructing check
  std::vector<CheckRecord> trace;
  std::optional<std::string> witness;   // banding catalog entry for realizable n
  std::optional<Rational> first_n0;     // first N_0 computed, in run order
};

/// Test hook: the verdict must not depend on the relative order of the
/// independent linking-form and N_0 checks, only the firing check may change.
enum class CheckOrder { Standard, LinkingFormAfterN0 };

/// Decide whether L(n,1) can arise from a distance-one surgery on a knot in
/// L(3,1), running every applicable obstruction and returning the full trace.
/// n = 0 yields an Obstructed report (torsion-free homology), not an error.
ObstructionReport classify(std::int64_t n, CheckOrder order = CheckOrder::Standard);

/// Re-run a single check by its qualified name (as stored in firing_check or
/// a trace record) and return its branch-level outcome. Throws
/// std::invalid_argument for names that cannot fire for this n.
CheckOutcome rerun_check(std::int64_t n, const std::string& qualified_name);

/// The n with a distance-one surgery from L(3,1) to L(n,1), ascending.
const std::vector<std::int64_t>& realizable_set();

struct ScanSummary {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<std::int64_t> not_obstructed;  // ascending
  std::vector<std::int64_t> expected;        // realizable_set() restricted to [lo, hi]
  bool matches_expected = false;
};

struct ScanResult {
  std::vector<ObstructionReport> reports;  // every nonzero n in [lo, hi], ascending
  ScanSummary summary;
};

/// Classify every nonzero n in [lo, hi]. The n-values are independent; the
/// parallel kernel distributes them across OpenMP threads (the d-invariant
/// memo table is the only shared state). Requires lo <= hi.
ScanResult scan(std::int64_t lo, std::int64_t hi, bool parallel = true);

/// Serial reference implementation of scan, kept for testing the parallel
/// kernel against.
ScanResult scan_serial(std::int64_t lo, std::int64_t hi);

}  // namespace lensband
