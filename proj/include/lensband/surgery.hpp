#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lensband/numtheory.hpp"
#include "lensband/rational.hpp"

namespace lensband {

/// A slope a*m + b*l on the boundary torus, in the (m, l) basis.
struct Slope {
  std::int64_t m = 0;
  std::int64_t l = 0;
};

/// Minimal geometric intersection number of two slopes: |a1*b2 - b1*a2|.
std::int64_t slope_distance(const Slope& s1, const Slope& s2);

/// The non-negative local h-invariants V_0, ..., V_p of a null-homologous
/// knot, constrained by V_i >= V_{i+1} >= V_i - 1.
class LocalHSequence {
 public:
  explicit LocalHSequence(std::vector<std::int64_t> values);

  /// All-zero sequence of length p + 1.
  static LocalHSequence zeros(std::int64_t p);

  const std::vector<std::int64_t>& values() const { return values_; }

 private:
  std::vector<std::int64_t> values_;
};

/// Surgery correction-term formula for a null-homologous knot:
///   d(Y_p(K), t_i) = d(Y, t) + d(L(p,1), i) - 2 * max(V_i, V_{p-i}).
/// Requires 0 <= i < p and a valid V of length p + 1.
Rational ni_wu_d(const Rational& d_base, std::int64_t p, std::int64_t spin,
                 const LocalHSequence& V);

/// The unknot model sequences: V_s = max(0, -s), H_s = max(0, s).
struct LocalH {
  std::int64_t v = 0;
  std::int64_t h = 0;

  friend bool operator==(const LocalH&, const LocalH&) = default;
};
LocalH unknot_local_h(std::int64_t s);

enum class Definiteness { Positive, Negative };

std::string to_string(Definiteness d);

/// A Spin structure index on L(n,1) together with the definiteness of the
/// Spin two-handle cobordism it is compatible with.
struct EvenSpinSolution {
  std::int64_t spin = 0;
  Definiteness definiteness = Definiteness::Positive;

  friend bool operator==(const EvenSpinSolution&, const EvenSpinSolution&) = default;
};

/// For even n != 0, solve the Spin-cobordism constraint over i in {0, |n|/2}:
/// a positive-definite cobordism needs d(L(n,1), i) = 1/4, a negative-definite
/// one needs d(L(n,1), i) = 3/4 (the d-jump across a Spin cobordism with
/// b2+ = 1, b2- = 0 is exactly -1/4, applied from d(L(3,1),0) = 1/2). Returns
/// every (i, definiteness) pair that satisfies its equation.
std::vector<EvenSpinSolution> even_spin_solutions(std::int64_t n);

/// The four surgery branches of the classification, keyed by |n| mod 3 and,
/// in the null-homologous case, by the sign of the surgery coefficient.
enum class SurgeryBranch {
  NullHomologousPositive,  // |n| = 3k via +k-surgery
  NullHomologousNegative,  // |n| = 3k via -k-surgery
  OrderPlusOne,            // |n| = 3k+1, homologically essential
  OrderMinusOne,           // |n| = 3k-1, homologically essential
};

std::string to_string(SurgeryBranch b);

/// N_0 of the self-conjugate surgery formula for the given branch. An
/// admissible N_0 is a non-negative integer; anything else (negative,
/// non-integral, or a failed self-conjugate selection) is itself an
/// obstruction.
struct N0Result {
  Rational value;
  std::int64_t spin = 0;  // self-conjugate index on the target used for d(Y', t)
  SurgeryBranch branch = SurgeryBranch::NullHomologousPositive;
  /// False when two self-conjugate structures exist but neither satisfies the
  /// required d = 1/4 dichotomy on the complementary structure.
  bool selection_ok = true;

  bool admissible() const { return selection_ok && value.is_nonnegative_integer(); }
};

/// Computes N_0 exactly:
///  - null-homologous branches (|n| = 3k, coefficient ±k):
///      2N_0 = d(±L(3,1), 0) + d(L(k,1), 0) - d(target, 0),
///    with the -k case evaluated after reversing orientation;
///  - |n| = 3k+1 (odd n only): 2N_0 = sign(n)*d(L(3k+1,1), 0) + d(L(3k+1,3), 1);
///  - |n| = 3k-1: 2N_0 = d(L(3k-1,3), 1) - d(Y', t), where t is the
///    self-conjugate structure with d != 1/4 when two exist (the other one
///    must carry d = 1/4).
/// Throws std::invalid_argument on a branch/n mismatch.
N0Result self_conjugate_n0(std::int64_t n, SurgeryBranch branch);

/// The six obstruction quadratics arising from V_1 in {N_0, N_0 - 1} in the
/// i = 1 surgery formula of each branch.
enum class QuadraticFamily { B1, B2, B3, B4, B5, B6 };

std::string to_string(QuadraticFamily f);

/// Integral roots of the named quadratic in the open interval (0, |n|), where
/// |n| = 3k for B1/B2, 3k+1 for B3/B4, and 3k-1 for B5/B6. Requires k >= 1.
///   B1: j^2 - 3kj - (3k-3)      B2: j^2 - 3kj + (3k+3)
///   B3: j^2 - (1+3k)j + (2-3k)  B4: j^2 - (1+3k)j + (3k+4)
///   B5: j^2 + (1-3k)j + (4-3k)  B6: j^2 + (1-3k)j + (3k+2)
RootList quadratic_obstruction_roots(QuadraticFamily family, std::int64_t k);

}  // namespace lensband
