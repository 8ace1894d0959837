#include "lensband/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lensband {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

}  // namespace

std::int64_t mod_reduce(std::int64_t a, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("mod_reduce: modulus must be >= 1");
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt: negative argument");
  return boost::multiprecision::sqrt(x);
}

bool is_perfect_square(const BigInt& x, BigInt* root) {
  if (x < 0) return false;
  BigInt r = boost::multiprecision::sqrt(x);
  if (r * r != x) return false;
  if (root != nullptr) *root = r;
  return true;
}

RootList integral_roots_monic(std::int64_t b, std::int64_t c, std::int64_t lo, std::int64_t hi) {
  if (!(lo < hi)) throw std::invalid_argument("integral_roots_monic: need lo < hi");
  BigInt disc = BigInt(b) * b - BigInt(4) * c;
  BigInt root;
  if (!is_perfect_square(disc, &root)) return {};
  // disc = b^2 - 4c forces root = b (mod 2), so both candidates are integral.
  BigInt r1 = (-BigInt(b) - root) / 2;
  BigInt r2 = (-BigInt(b) + root) / 2;
  RootList out;
  for (const BigInt& r : {r1, r2}) {
    if (r > lo && r < hi) out.push_back(static_cast<std::int64_t>(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_square_mod(std::int64_t a, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("is_square_mod: modulus must be >= 2");
  std::int64_t target = mod_reduce(a, m);
  for (std::int64_t x = 0; x < m; ++x) {
    if (mulmod(x, x, m) == target) return true;
  }
  return false;
}

bool square_equivalent(std::int64_t q1, std::int64_t q2, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("square_equivalent: modulus must be >= 1");
  if (p == 1) return true;
  std::int64_t a1 = mod_reduce(q1, p);
  std::int64_t a2 = mod_reduce(q2, p);
  if (std::gcd(a1, p) != 1 || std::gcd(a2, p) != 1) {
    throw std::invalid_argument("square_equivalent: residues must be coprime to the modulus");
  }
  for (std::int64_t a = 1; a < p; ++a) {
    if (std::gcd(a, p) != 1) continue;
    if (mulmod(a2, mulmod(a, a, p), p) == a1) return true;
  }
  return false;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
  if (m == 1) return 0;
  std::int64_t r0 = m, r1 = mod_reduce(a, m);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: argument not coprime to the modulus");
  return mod_reduce(t0, m);
}

}  // namespace lensband
