#pragma once

#include <cstdint>
#include <vector>

#include "lensband/rational.hpp"

namespace lensband {

/// Sorted, strictly increasing list of integer roots.
using RootList = std::vector<std::int64_t>;

/// Canonical representative of a mod m in [0, m). Requires m >= 1.
std::int64_t mod_reduce(std::int64_t a, std::int64_t m);

/// Floor of the square root. Throws std::domain_error for negative input.
BigInt isqrt(const BigInt& x);

/// True iff x is a perfect square; on success *root (if given) receives sqrt(x).
bool is_perfect_square(const BigInt& x, BigInt* root = nullptr);

/// Integer roots of j^2 + b*j + c in the open interval (lo, hi), by an exact
/// discriminant test (perfect-square check on b^2 - 4c). Requires lo < hi.
RootList integral_roots_monic(std::int64_t b, std::int64_t c, std::int64_t lo, std::int64_t hi);

/// True iff a is a quadratic residue mod m (some x in [0, m) with x^2 = a),
/// by exhaustive scan. Requires m >= 2.
bool is_square_mod(std::int64_t a, std::int64_t m);

/// True iff q1 = q2 * a^2 (mod p) for some unit a mod p. Requires p >= 1 and
/// gcd(q1, p) = gcd(q2, p) = 1; p = 1 always returns true.
bool square_equivalent(std::int64_t q1, std::int64_t q2, std::int64_t p);

/// Inverse of a mod m (m >= 1, gcd(a, m) = 1); m = 1 returns 0.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

}  // namespace lensband
