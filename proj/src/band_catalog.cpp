#include "lensband/band_catalog.hpp"

namespace lensband {

const std::vector<WitnessEntry>& witness_catalog() {
  static const std::vector<WitnessEntry> catalog = {
      {1, false, "Figure 2 (right): non-coherent banding from T(2,3) to the unknot"},
      {-1, false,
       "Figure 2 (right), mirrored: non-coherent banding from the left-handed trefoil to the "
       "unknot"},
      {3, false, "Figure 2 (center): non-coherent banding from T(2,3) to itself"},
      {7, false, "Figure 2 (left): non-coherent banding from T(2,3) to T(2,7)"},
      {2, true, "Figure 3 (left): coherent banding from T(2,3) to T(2,2)"},
      {-2, true,
       "Figure 3 (left): coherent banding from T(2,3) to the Hopf link (L(2,1) = L(-2,1) covers "
       "n = -2)"},
      {4, true, "Figure 3 (center): coherent banding from T(2,3) to T(2,4)"},
      {-6, true, "Figure 3 (right): coherent banding from T(2,-6) to T(2,3)"},
  };
  return catalog;
}

const WitnessEntry* find_witness(std::int64_t n) {
  for (const WitnessEntry& e : witness_catalog()) {
    if (e.n == n) return &e;
  }
  return nullptr;
}

const WitnessEntry* find_witness(std::int64_t n, bool coherent) {
  for (const WitnessEntry& e : witness_catalog()) {
    if (e.n == n && e.coherent == coherent) return &e;
  }
  return nullptr;
}

}  // namespace lensband
