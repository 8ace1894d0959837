#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lensband/rational.hpp"

namespace lensband {

/// Oriented lens space L(p,q) in canonical form: p >= 1, 0 <= q < p, and
/// gcd(p,q) = 1 (p = 1 denotes S^3, stored as L(1,0)). Orientation is always
/// positive; -L(p,q) is represented as L(p, p-q).
struct LensSpace {
  std::int64_t p = 1;
  std::int64_t q = 0;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

/// Result of normalizing user input: the canonical space plus whether an
/// orientation reversal was absorbed (callers may need it to map Spin^c
/// indices between conventions).
struct NormalizedLens {
  LensSpace space;
  bool orientation_reversed = false;
};

/// Canonicalize L(p_raw, q_raw). Negative p_raw means the reversed orientation
/// -L(|p_raw|, q_raw) and is rewritten as L(|p_raw|, |p_raw| - q). Throws
/// std::invalid_argument when p_raw = 0 or gcd(|p_raw|, q_raw) > 1 (with
/// |p_raw| > 1).
NormalizedLens normalize(std::int64_t p_raw, std::int64_t q_raw);

/// Canonical Spin^c representative of i mod p, in [0, p).
std::int64_t canonical_spin(const LensSpace& L, std::int64_t i);

/// d(L(p,q), i) by the recursive correction-term formula
///   d(L(p,q), i) = -1/4 + (2i+1-p-q)^2 / (4pq) - d(L(q, p mod q), i mod q),
/// with d(S^3) = 0. Requires canonical L and 0 <= i < p. Results are memoized
/// in a shared table; concurrent calls are safe.
Rational d_invariant(const LensSpace& L, std::int64_t spin);

/// d(L(n,1), i) in closed form: -1/4 + (2i-n)^2/(4n) for n > 0, and its
/// negation evaluated at |n| for n < 0 (d-invariants change sign under
/// orientation reversal). Requires n != 0 and 0 <= i < |n|.
Rational d_L_n1(std::int64_t n, std::int64_t spin);

/// The self-conjugate Spin^c structures: the integers among (p+q-1)/2 and
/// (q-1)/2, reduced mod p. Exactly one element when p is odd, two when even.
std::vector<std::int64_t> self_conjugate_spins(const LensSpace& L);

/// Spin^c conjugation: i -> (q - 1 - i) mod p, the affine involution whose
/// fixed points are self_conjugate_spins(L).
std::int64_t conjugate_spin(const LensSpace& L, std::int64_t spin);

/// Drop every memoized d-invariant (useful for benchmarks and cold-start
/// measurements). Thread-safe.
void clear_d_invariant_cache();

/// Number of memoized (p, q, i) entries.
std::size_t d_invariant_cache_size();

}  // namespace lensband
