#include "lensband/classify.hpp"

#include <numeric>
#include <stdexcept>

#include "lensband/band_catalog.hpp"
#include "lensband/lens.hpp"
#include "lensband/linkform.hpp"
#include "lensband/numtheory.hpp"
#include "lensband/surgery.hpp"

namespace lensband {

namespace {

constexpr const char* kTorsionFreeHomology = "torsion_free_homology";
constexpr const char* kTrivialOrder = "trivial_order";
constexpr const char* kHomologyGcd = "homology_gcd";
constexpr const char* kEvenDefiniteness = "even_definiteness";
constexpr const char* kLinkingForm = "linking_form";
constexpr const char* kN0Integrality = "n0_integrality";
constexpr const char* kQuadraticRoots = "quadratic_roots";

constexpr const char* kCiteTorsionFree =
    "no surgery on a null-homologous knot in L(3,1) has torsion-free first homology";
constexpr const char* kCiteTrivial =
    "|H1| = 1 forces S^3, realized by the banding from T(2,3) to the unknot";
constexpr const char* kCiteGcd =
    "|H1| = 3k forces a null-homologous knot with surgery coefficient ±k and gcd(k,3) = 1";
constexpr const char* kCiteEvenNull =
    "even |H1| forces a Spin two-handle cobordism, whose -1/4 d-jump pins d(L(n,1), i) to 1/4 "
    "(positive-definite, +k-surgery) or 3/4 (negative-definite, -k-surgery) at i in {0, |n|/2}";
constexpr const char* kCiteEvenPlus =
    "the two-handle cobordism is negative-definite when |H1| = 3k+1; a Spin cobordism then needs "
    "d(L(n,1), i) = 3/4 at i in {0, |n|/2}";
constexpr const char* kCiteEvenMinus =
    "the two-handle cobordism is positive-definite when |H1| = 3k-1; a Spin cobordism then needs "
    "d(L(n,1), i) = 1/4 at i in {0, |n|/2}";
constexpr const char* kCiteLinkForm =
    "the filling slope (3k±1)m + k*l carries linking form k/|n|, which must agree with "
    "sign(n)/|n| up to multiplication by squares of units";
constexpr const char* kCiteN0Null =
    "d(Y_{±k}(K), t_0) = d(±L(3,1), t) + d(L(k,1), 0) - 2N_0 with N_0 = V_0 a non-negative "
    "integer";
constexpr const char* kCiteN0Plus =
    "d(Y', t) + d(L(3k+1,3), 1) = 2N_0 for the self-conjugate t, with N_0 a non-negative integer";
constexpr const char* kCiteN0Minus =
    "d(Y', t) = d(L(3k-1,3), 1) - 2N_0 for a self-conjugate t, with N_0 a non-negative integer; "
    "a second self-conjugate structure must carry d = 1/4";
constexpr const char* kCiteQuadNull =
    "V_1 in {N_0, N_0 - 1} turns the i = 1 surgery formula into the quadratics B1/B2, which need "
    "an integral root j in (0, 3k)";
constexpr const char* kCiteQuadPlus =
    "for N_0 >= 2, some N_1 in {N_0, N_0 - 1} satisfies d(Y', t') + d(L(3k+1,3), 4) = 2N_1, so "
    "one of the quadratics B3/B4 needs an integral root in (0, 3k+1)";
constexpr const char* kCiteQuadMinus =
    "for N_0 >= 2, some N_1 in {N_0, N_0 - 1} satisfies d(Y', t') = d(L(3k-1,3), 4) - 2N_1, so "
    "one of the quadratics B5/B6 needs an integral root in (0, 3k-1)";

using Inputs = std::vector<std::pair<std::string, std::string>>;

std::string render_roots(const RootList& roots) {
  std::string s = "[";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(roots[i]);
  }
  return s + "]";
}

std::string render_solutions(const std::vector<EvenSpinSolution>& sols) {
  std::string s = "{";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    if (i > 0) s += ", ";
    s += "(i=" + std::to_string(sols[i].spin) + ", " + to_string(sols[i].definiteness) + ")";
  }
  return s + "}";
}

CheckRecord make_record(const char* name, std::string branch, CheckOutcome outcome,
                        const char* citation, Inputs inputs) {
  CheckRecord r;
  r.name = name;
  r.branch = std::move(branch);
  r.inputs = std::move(inputs);
  r.outcome = outcome;
  r.citation = citation;
  return r;
}

CheckRecord check_even_definiteness(std::int64_t n, Definiteness required, std::string branch,
                                    const char* citation) {
  auto sols = even_spin_solutions(n);
  bool ok = false;
  for (const auto& s : sols) ok = ok || s.definiteness == required;
  Inputs in{{"required", to_string(required)}, {"solutions", render_solutions(sols)}};
  return make_record(kEvenDefiniteness, std::move(branch), ok ? CheckOutcome::Passes : CheckOutcome::Obstructs,
                     citation, std::move(in));
}

CheckRecord check_linking_form(std::int64_t n) {
  LinkingForm filling = filling_linking_form(n);
  LinkingForm target = target_linking_form(n);
  bool eq = linking_forms_equivalent(filling, target);
  Inputs in{{"filling", filling.str()}, {"target", target.str()}};
  if (filling.p > 1) {
    // The residue that has to be the square of a unit mod |n|.
    std::int64_t residue =
        mod_reduce(static_cast<std::int64_t>(static_cast<__int128>(filling.q) *
                                             mod_inverse(target.q, target.p) % target.p),
                   target.p);
    in.emplace_back("residue", std::to_string(residue));
  }
  in.emplace_back("equivalent", eq ? "true" : "false");
  return make_record(kLinkingForm, "", eq ? CheckOutcome::Passes : CheckOutcome::Obstructs,
                     kCiteLinkForm, std::move(in));
}

CheckRecord check_n0(std::int64_t n, SurgeryBranch branch, std::string branch_label,
                     const char* citation, N0Result* out) {
  N0Result r = self_conjugate_n0(n, branch);
  if (out != nullptr) *out = r;
  Inputs in{{"N0", r.value.str()}, {"spin", std::to_string(r.spin)}};
  if (!r.selection_ok) {
    in.emplace_back("selection", "no self-conjugate assignment satisfies the d = 1/4 dichotomy");
  }
  bool ok = r.admissible();
  return make_record(kN0Integrality, std::move(branch_label),
                     ok ? CheckOutcome::Passes : CheckOutcome::Obstructs, citation, std::move(in));
}

struct QuadraticStep {
  QuadraticFamily first;
  QuadraticFamily second;
  const char* citation;
  bool in_proven_range;  // may the absence of roots be promoted to an obstruction?
};

CheckRecord check_quadratics(std::int64_t k, const QuadraticStep& step, bool guard_met,
                             const char* guard_note, std::string branch_label) {
  Inputs in{{"k", std::to_string(k)}};
  if (!guard_met) {
    in.emplace_back("guard", guard_note);
    return make_record(kQuadraticRoots, std::move(branch_label), CheckOutcome::Inconclusive,
                       step.citation, std::move(in));
  }
  RootList first = quadratic_obstruction_roots(step.first, k);
  RootList second = quadratic_obstruction_roots(step.second, k);
  in.emplace_back(to_string(step.first) + "_roots", render_roots(first));
  in.emplace_back(to_string(step.second) + "_roots", render_roots(second));
  CheckOutcome outcome;
  if (!first.empty() || !second.empty()) {
    outcome = CheckOutcome::Passes;
  } else if (step.in_proven_range) {
    outcome = CheckOutcome::Obstructs;
  } else {
    in.emplace_back("range", "outside the proven k-range; no conclusion drawn");
    outcome = CheckOutcome::Inconclusive;
  }
  return make_record(kQuadraticRoots, std::move(branch_label), outcome, step.citation,
                     std::move(in));
}

void finalize(ObstructionReport& rep) {
  bool obstructed = false;
  for (const CheckRecord& r : rep.trace) {
    if (r.outcome == CheckOutcome::Obstructs) {
      if (!obstructed) rep.firing_check = r.qualified_name();
      obstructed = true;
    }
  }
  rep.verdict = obstructed ? Verdict::Obstructed : Verdict::NotObstructed;
  if (rep.verdict == Verdict::NotObstructed) {
    if (const WitnessEntry* w = find_witness(rep.n)) rep.witness = w->description;
  }
}

// |n| = 3k: both candidate surgery signs must be ruled out.
void classify_null(std::int64_t n, ObstructionReport& rep) {
  std::int64_t a = n < 0 ? -n : n;
  std::int64_t k = a / 3;

  {
    bool ok = std::gcd(k, std::int64_t{3}) == 1;
    Inputs in{{"k", std::to_string(k)}, {"gcd(k,3)", std::to_string(std::gcd(k, std::int64_t{3}))}};
    rep.trace.push_back(make_record(kHomologyGcd, "", ok ? CheckOutcome::Passes : CheckOutcome::Obstructs,
                                    kCiteGcd, std::move(in)));
    if (!ok) return;  // no surgery presentation exists at all
  }

  struct SignRun {
    std::vector<CheckRecord> records;
    bool obstructed = false;
  };
  SignRun runs[2];
  for (int idx = 0; idx < 2; ++idx) {
    bool positive = idx == 0;
    std::string label = positive ? "+k" : "-k";
    SurgeryBranch branch =
        positive ? SurgeryBranch::NullHomologousPositive : SurgeryBranch::NullHomologousNegative;
    SignRun& run = runs[idx];

    if (n % 2 == 0) {
      run.records.push_back(check_even_definiteness(
          n, positive ? Definiteness::Positive : Definiteness::Negative, label, kCiteEvenNull));
    }

    N0Result n0;
    run.records.push_back(check_n0(n, branch, label, kCiteN0Null, &n0));
    if (!rep.first_n0) rep.first_n0 = n0.value;

    // The i = 1 refinement exists for +k-surgeries to negative targets and
    // -k-surgeries to positive targets; the other two signs end at the
    // N_0 inequality.
    bool has_quadratics = (n > 0 && !positive) || (n < 0 && positive);
    if (has_quadratics) {
      bool in_range = (n > 0) ? k >= 2 : (k == 1 || k > 2);
      QuadraticStep step{QuadraticFamily::B1, QuadraticFamily::B2, kCiteQuadNull, in_range};
      bool guard = n0.admissible() && k >= 2;
      run.records.push_back(
          check_quadratics(k, step, guard, "requires an admissible N0 and k >= 2", label));
    }

    for (const CheckRecord& r : run.records) run.obstructed = run.obstructed || r.outcome == CheckOutcome::Obstructs;
  }

  bool both = runs[0].obstructed && runs[1].obstructed;
  for (SignRun& run : runs) {
    for (CheckRecord& r : run.records) {
      if (r.outcome == CheckOutcome::Obstructs && !both) {
        // This sign is impossible, but n itself survives through the other
        // sign, so the record may not read as an obstruction of n.
        r.outcome = CheckOutcome::Inconclusive;
        r.inputs.emplace_back("sign_verdict",
                              "ruled out for this surgery sign; n survives via the other sign");
      }
      rep.trace.push_back(std::move(r));
    }
  }
}

// |n| = 3k+1: homologically essential, negative-definite cobordism.
void classify_plus_one(std::int64_t n, ObstructionReport& rep, CheckOrder order) {
  std::int64_t a = n < 0 ? -n : n;
  std::int64_t k = (a - 1) / 3;

  std::optional<N0Result> n0;
  auto run_even = [&] {
    if (n % 2 == 0) {
      rep.trace.push_back(check_even_definiteness(n, Definiteness::Negative, "", kCiteEvenPlus));
    }
  };
  auto run_link = [&] { rep.trace.push_back(check_linking_form(n)); };
  auto run_n0 = [&] {
    if (n % 2 != 0) {
      N0Result r;
      rep.trace.push_back(check_n0(n, SurgeryBranch::OrderPlusOne, "", kCiteN0Plus, &r));
      n0 = r;
      if (!rep.first_n0) rep.first_n0 = r.value;
    }
  };

  run_even();
  if (order == CheckOrder::Standard) {
    run_link();
    run_n0();
  } else {
    run_n0();
    run_link();
  }

  bool guard = n0.has_value() && n0->admissible() && n0->value >= Rational(2);
  QuadraticStep step{QuadraticFamily::B3, QuadraticFamily::B4, kCiteQuadPlus, k >= 4};
  rep.trace.push_back(check_quadratics(k, step, guard, "requires N0 >= 2", ""));
}

// |n| = 3k-1: homologically essential, positive-definite cobordism.
void classify_minus_one(std::int64_t n, ObstructionReport& rep, CheckOrder order) {
  std::int64_t a = n < 0 ? -n : n;
  std::int64_t k = (a + 1) / 3;

  N0Result n0;
  auto run_even = [&] {
    if (n % 2 == 0) {
      rep.trace.push_back(check_even_definiteness(n, Definiteness::Positive, "", kCiteEvenMinus));
    }
  };
  auto run_link = [&] { rep.trace.push_back(check_linking_form(n)); };
  auto run_n0 = [&] {
    rep.trace.push_back(check_n0(n, SurgeryBranch::OrderMinusOne, "", kCiteN0Minus, &n0));
    if (!rep.first_n0) rep.first_n0 = n0.value;
  };

  run_even();
  if (order == CheckOrder::Standard) {
    run_link();
    run_n0();
  } else {
    run_n0();
    run_link();
  }

  bool guard = n0.admissible() && n0.value >= Rational(2);
  QuadraticStep step{QuadraticFamily::B5, QuadraticFamily::B6, kCiteQuadMinus, k >= 5};
  rep.trace.push_back(check_quadratics(k, step, guard, "requires N0 >= 2", ""));
}

}  // namespace

std::string to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Obstructs:
      return "obstructs";
    case CheckOutcome::Passes:
      return "passes";
    case CheckOutcome::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(Verdict v) {
  return v == Verdict::Obstructed ? "Obstructed" : "NotObstructed";
}

std::string CheckRecord::qualified_name() const {
  return branch.empty() ? name : name + "[" + branch + "]";
}

ObstructionReport classify(std::int64_t n, CheckOrder order) {
  ObstructionReport rep;
  rep.n = n;

  if (n == 0) {
    rep.trace.push_back(make_record(kTorsionFreeHomology, "", CheckOutcome::Obstructs,
                                    kCiteTorsionFree, {{"H1", "Z (torsion-free)"}}));
    finalize(rep);
    return rep;
  }

  std::int64_t a = n < 0 ? -n : n;
  if (a == 1) {
    rep.trace.push_back(
        make_record(kTrivialOrder, "", CheckOutcome::Passes, kCiteTrivial, {{"|n|", "1"}}));
    finalize(rep);
    return rep;
  }

  switch (a % 3) {
    case 0:
      classify_null(n, rep);
      break;
    case 1:
      classify_plus_one(n, rep, order);
      break;
    default:
      classify_minus_one(n, rep, order);
      break;
  }
  finalize(rep);
  return rep;
}

CheckOutcome rerun_check(std::int64_t n, const std::string& qualified_name) {
  std::string name = qualified_name;
  std::string branch;
  if (auto pos = qualified_name.find('['); pos != std::string::npos) {
    name = qualified_name.substr(0, pos);
    branch = qualified_name.substr(pos + 1, qualified_name.size() - pos - 2);
  }
  std::int64_t a = n < 0 ? -n : n;

  if (name == kTorsionFreeHomology) {
    if (n != 0) throw std::invalid_argument("rerun_check: fires only for n = 0");
    return CheckOutcome::Obstructs;
  }
  if (name == kTrivialOrder) {
    if (a != 1) throw std::invalid_argument("rerun_check: fires only for |n| = 1");
    return CheckOutcome::Passes;
  }
  if (name == kHomologyGcd) {
    if (a % 3 != 0 || a == 0) throw std::invalid_argument("rerun_check: needs |n| = 3k");
    return std::gcd(a / 3, std::int64_t{3}) == 1 ? CheckOutcome::Passes : CheckOutcome::Obstructs;
  }
  if (name == kEvenDefiniteness) {
    Definiteness required;
    if (branch == "+k") {
      required = Definiteness::Positive;
    } else if (branch == "-k") {
      required = Definiteness::Negative;
    } else if (a % 3 == 1) {
      required = Definiteness::Negative;
    } else if (a % 3 == 2) {
      required = Definiteness::Positive;
    } else {
      throw std::invalid_argument("rerun_check: even_definiteness needs a surgery-sign branch");
    }
    return check_even_definiteness(n, required, branch, "").outcome;
  }
  if (name == kLinkingForm) return check_linking_form(n).outcome;
  if (name == kN0Integrality) {
    SurgeryBranch sb;
    if (branch == "+k") {
      sb = SurgeryBranch::NullHomologousPositive;
    } else if (branch == "-k") {
      sb = SurgeryBranch::NullHomologousNegative;
    } else if (a % 3 == 1) {
      sb = SurgeryBranch::OrderPlusOne;
    } else if (a % 3 == 2) {
      sb = SurgeryBranch::OrderMinusOne;
    } else {
      throw std::invalid_argument("rerun_check: n0_integrality needs a surgery-sign branch");
    }
    return self_conjugate_n0(n, sb).admissible() ? CheckOutcome::Passes : CheckOutcome::Obstructs;
  }
  if (name == kQuadraticRoots) {
    std::int64_t k = 0;
    QuadraticStep step{QuadraticFamily::B1, QuadraticFamily::B2, "", true};
    bool guard = false;
    if (branch == "+k" || branch == "-k") {
      if (a % 3 != 0) throw std::invalid_argument("rerun_check: needs |n| = 3k");
      k = a / 3;
      SurgeryBranch sb = branch == "+k" ? SurgeryBranch::NullHomologousPositive
                                        : SurgeryBranch::NullHomologousNegative;
      N0Result n0 = self_conjugate_n0(n, sb);
      step = {QuadraticFamily::B1, QuadraticFamily::B2, kCiteQuadNull,
              (n > 0) ? k >= 2 : (k == 1 || k > 2)};
      guard = n0.admissible() && k >= 2;
    } else if (a % 3 == 1) {
      k = (a - 1) / 3;
      step = {QuadraticFamily::B3, QuadraticFamily::B4, kCiteQuadPlus, k >= 4};
      if (n % 2 != 0) {
        N0Result n0 = self_conjugate_n0(n, SurgeryBranch::OrderPlusOne);
        guard = n0.admissible() && n0.value >= Rational(2);
      }
    } else if (a % 3 == 2) {
      k = (a + 1) / 3;
      step = {QuadraticFamily::B5, QuadraticFamily::B6, kCiteQuadMinus, k >= 5};
      N0Result n0 = self_conjugate_n0(n, SurgeryBranch::OrderMinusOne);
      guard = n0.admissible() && n0.value >= Rational(2);
    } else {
      throw std::invalid_argument("rerun_check: quadratic_roots needs a surgery-sign branch");
    }
    return check_quadratics(k, step, guard, "", branch).outcome;
  }
  throw std::invalid_argument("rerun_check: unknown check name '" + name + "'");
}

const std::vector<std::int64_t>& realizable_set() {
  static const std::vector<std::int64_t> values = {-6, -2, -1, 1, 2, 3, 4, 7};
  return values;
}

}  // namespace lensband
