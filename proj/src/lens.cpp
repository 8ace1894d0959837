#include "lensband/lens.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "lensband/numtheory.hpp"

namespace lensband {

namespace {

struct MemoKey {
  std::int64_t p;
  std::int64_t q;
  std::int64_t i;

  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    std::size_t h = std::hash<std::int64_t>{}(k.p);
    h ^= std::hash<std::int64_t>{}(k.q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::int64_t>{}(k.i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::shared_mutex memo_mutex;
std::unordered_map<MemoKey, Rational, MemoKeyHash> memo;

void validate_canonical(const LensSpace& L) {
  if (L.p < 1) throw std::invalid_argument("LensSpace: p must be >= 1");
  if (L.p == 1) {
    if (L.q != 0) throw std::invalid_argument("LensSpace: S^3 is L(1,0)");
    return;
  }
  if (L.q < 0 || L.q >= L.p || std::gcd(L.p, L.q) != 1) {
    throw std::invalid_argument("LensSpace: need 0 <= q < p with gcd(p,q) = 1");
  }
}

// Valid for 0 <= i < p + q.  The (p,q) chain shrinks like the Euclidean
// algorithm, ending at q <= 1.
Rational d_recursive(std::int64_t p, std::int64_t q, std::int64_t i) {
  if (p == 1) return Rational(0);

  MemoKey key{p, q, i};
  {
    std::shared_lock lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  std::int64_t t = 2 * i + 1 - p - q;
  // -1/4 + t^2/(4pq) in one reduction.
  Rational value(BigInt(t) * t - BigInt(p) * q, BigInt(4) * p * q);
  value -= d_recursive(q, p % q, i % q);

  {
    std::unique_lock lock(memo_mutex);
    memo.emplace(key, value);
  }
  return value;
}

}  // namespace

NormalizedLens normalize(std::int64_t p_raw, std::int64_t q_raw) {
  if (p_raw == 0) throw std::invalid_argument("normalize: p must be nonzero");
  bool reversed = p_raw < 0;
  std::int64_t p = reversed ? -p_raw : p_raw;
  if (p == 1) return {{1, 0}, reversed};
  std::int64_t q = mod_reduce(q_raw, p);
  if (std::gcd(p, q) != 1) throw std::invalid_argument("normalize: gcd(p,q) must be 1");
  if (reversed) q = p - q;
  return {{p, q}, reversed};
}

std::int64_t canonical_spin(const LensSpace& L, std::int64_t i) { return mod_reduce(i, L.p); }

Rational d_invariant(const LensSpace& L, std::int64_t spin) {
  validate_canonical(L);
  if (spin < 0 || spin >= L.p) throw std::out_of_range("d_invariant: spin index out of range");
  return d_recursive(L.p, L.q, spin);
}

Rational d_L_n1(std::int64_t n, std::int64_t spin) {
  if (n == 0) throw std::invalid_argument("d_L_n1: n must be nonzero");
  std::int64_t a = n < 0 ? -n : n;
  if (spin < 0 || spin >= a) throw std::out_of_range("d_L_n1: spin index out of range");
  std::int64_t t = 2 * spin - a;
  Rational value(BigInt(t) * t - a, BigInt(4) * a);
  return n > 0 ? value : -value;
}

std::vector<std::int64_t> self_conjugate_spins(const LensSpace& L) {
  validate_canonical(L);
  std::vector<std::int64_t> out;
  if ((L.p + L.q - 1) % 2 == 0) out.push_back(mod_reduce((L.p + L.q - 1) / 2, L.p));
  if (L.q >= 1 && (L.q - 1) % 2 == 0) out.push_back(mod_reduce((L.q - 1) / 2, L.p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t conjugate_spin(const LensSpace& L, std::int64_t spin) {
  validate_canonical(L);
  return mod_reduce(L.q - 1 - spin, L.p);
}

void clear_d_invariant_cache() {
  std::unique_lock lock(memo_mutex);
  memo.clear();
}

std::size_t d_invariant_cache_size() {
  std::shared_lock lock(memo_mutex);
  return memo.size();
}

}  // namespace lensband
