#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lensband/band_catalog.hpp"

namespace lensband {

/// The torus link T(2,n): a knot for odd n, a two-component link for even n;
/// its determinant is |n|.
struct TorusLink {
  std::int64_t n = 0;

  int components() const { return n % 2 == 0 ? 2 : 1; }
  std::int64_t determinant() const { return n < 0 ? -n : n; }
};

enum class BandReason { SurgeryObstruction, ParityMismatch, Realized };

std::string to_string(BandReason r);

struct BandVerdict {
  bool possible = false;
  BandReason reason = BandReason::SurgeryObstruction;
  std::optional<std::string> witness;  // non-empty whenever possible
};

/// Can T(2,n) be obtained from the trefoil T(2,3) by a banding of the given
/// coherence? A coherent banding changes the number of components, so it
/// needs even n; a non-coherent one preserves knot-ness, so it needs odd n.
/// Past the parity gate the answer is the surgery classification, with the
/// witness drawn from the catalog.
BandVerdict banding_possible(std::int64_t n, bool coherent);

/// Determinant obstruction for bandings from an unknotting-number-one knot K:
/// passes (returns true) iff 2*det(L) or -2*det(L) is a quadratic residue of
/// det(K). Always true for det(K) = 3, so it never obstructs the trefoil.
/// Requires odd det_k >= 1 and det_l >= 0.
bool kanenobu_check(std::int64_t det_k, std::int64_t det_l);

}  // namespace lensband
