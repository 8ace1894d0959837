#pragma once

#include <cstdint>
#include <string>

namespace lensband {

/// Torsion linking form q/p on a cyclic H_1, as an element of Q/Z: stored with
/// 0 <= q < p, gcd(p,q) = 1; p = 1 is the trivial form. Values are compared
/// only up to multiplication by squares of units mod p.
struct LinkingForm {
  std::int64_t p = 1;
  std::int64_t q = 0;

  std::string str() const { return std::to_string(q) + "/" + std::to_string(p); }

  friend bool operator==(const LinkingForm&, const LinkingForm&) = default;
};

/// Linking form of the distance-one filling realizing |H_1| = |n| on the
/// exterior of a homologically essential knot in L(3,1): the filling slope is
/// (3k±1)m + k*l, so the form is k/|n| with |n| = 3k+1 or 3k-1. Rejects
/// |n| = 0 (mod 3) (the knot would be null-homologous).
LinkingForm filling_linking_form(std::int64_t n);

/// Linking form of the target L(n,1) with its orientation: sign(n)/|n|,
/// i.e. 1/|n| for n > 0 and the residue of -1 mod |n| for n < 0.
LinkingForm target_linking_form(std::int64_t n);

/// Equivalence in Q/Z up to squares of units: false when the orders differ,
/// otherwise square_equivalent(f.q, g.q, p).
bool linking_forms_equivalent(const LinkingForm& f, const LinkingForm& g);

}  // namespace lensband
