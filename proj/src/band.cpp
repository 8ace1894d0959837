#include "lensband/band.hpp"

#include <stdexcept>

#include "lensband/classify.hpp"
#include "lensband/numtheory.hpp"

namespace lensband {

std::string to_string(BandReason r) {
  switch (r) {
    case BandReason::SurgeryObstruction:
      return "surgery-obstruction";
    case BandReason::ParityMismatch:
      return "parity-mismatch";
    case BandReason::Realized:
      return "realized";
  }
  return "?";
}

BandVerdict banding_possible(std::int64_t n, bool coherent) {
  if (n == 0) throw std::invalid_argument("banding_possible: n must be nonzero");
  bool even = n % 2 == 0;
  if (coherent != even) return {false, BandReason::ParityMismatch, std::nullopt};

  ObstructionReport rep = classify(n);
  if (rep.verdict == Verdict::Obstructed) {
    return {false, BandReason::SurgeryObstruction, std::nullopt};
  }
  const WitnessEntry* w = find_witness(n, coherent);
  return {true, BandReason::Realized, w != nullptr ? std::optional(w->description) : std::nullopt};
}

bool kanenobu_check(std::int64_t det_k, std::int64_t det_l) {
  if (det_k < 1 || det_k % 2 == 0) {
    throw std::invalid_argument("kanenobu_check: det(K) must be odd and >= 1");
  }
  if (det_l < 0) throw std::invalid_argument("kanenobu_check: det(L) must be >= 0");
  if (det_k == 1) return true;  // everything is a residue mod 1
  return is_square_mod(2 * det_l, det_k) || is_square_mod(-2 * det_l, det_k);
}

}  // namespace lensband
