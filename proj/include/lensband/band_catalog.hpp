#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lensband {

/// One realized banding between T(2,3) and T(2,n), as catalogued in the
/// figures. Witnesses are textual descriptions of the drawn bands; the
/// diagrams themselves are not re-verified here.
struct WitnessEntry {
  std::int64_t n = 0;
  bool coherent = false;
  std::string description;
};

/// The fixed catalog of realized bandings: n in {1, -1, 3, 7} non-coherent
/// (Figure 2, with n = -1 the mirror of the unknot banding) and
/// n in {2, -2, 4, -6} coherent (Figure 3).
const std::vector<WitnessEntry>& witness_catalog();

/// Catalog lookup by n; nullptr when absent.
const WitnessEntry* find_witness(std::int64_t n);

/// Catalog lookup by n and coherence; nullptr when absent.
const WitnessEntry* find_witness(std::int64_t n, bool coherent);

}  // namespace lensband
