#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "lensband/classify.hpp"

using namespace lensband;

namespace {

const CheckRecord* find_record(const ObstructionReport& rep, const std::string& name,
                               const std::string& branch = "") {
  for (const CheckRecord& r : rep.trace) {
    if (r.name == name && r.branch == branch) return &r;
  }
  return nullptr;
}

std::string input_value(const CheckRecord& r, const std::string& key) {
  for (const auto& [k, v] : r.inputs) {
    if (k == key) return v;
  }
  return "";
}

}  // namespace

TEST_CASE("classify pinned verdicts from the classification") {
  CHECK(classify(7).verdict == Verdict::NotObstructed);
  CHECK(classify(5).verdict == Verdict::Obstructed);
  CHECK(classify(9).verdict == Verdict::Obstructed);
  CHECK(classify(-6).verdict == Verdict::NotObstructed);
  CHECK(classify(0).verdict == Verdict::Obstructed);
  CHECK(classify(1).verdict == Verdict::NotObstructed);
  CHECK(classify(-1).verdict == Verdict::NotObstructed);
  CHECK(classify(2).verdict == Verdict::NotObstructed);
  CHECK(classify(-2).verdict == Verdict::NotObstructed);
  CHECK(classify(3).verdict == Verdict::NotObstructed);
  CHECK(classify(4).verdict == Verdict::NotObstructed);
}

TEST_CASE("classify(7): essential branch survives with a small N0") {
  ObstructionReport rep = classify(7);
  CHECK(rep.verdict == Verdict::NotObstructed);
  CHECK_FALSE(rep.firing_check.has_value());
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->find("T(2,7)") != std::string::npos);

  const CheckRecord* link = find_record(rep, "linking_form");
  REQUIRE(link != nullptr);
  CHECK(link->outcome == CheckOutcome::Passes);

  const CheckRecord* n0 = find_record(rep, "n0_integrality");
  REQUIRE(n0 != nullptr);
  CHECK(n0->outcome == CheckOutcome::Passes);
  CHECK(input_value(*n0, "N0") == "1");

  // N0 = 1 < 2: the quadratic refinement may not fire
  const CheckRecord* quad = find_record(rep, "quadratic_roots");
  REQUIRE(quad != nullptr);
  CHECK(quad->outcome == CheckOutcome::Inconclusive);
}

TEST_CASE("classify(5): linking form fires first, N0 also obstructs") {
  ObstructionReport rep = classify(5);
  CHECK(rep.verdict == Verdict::Obstructed);
  REQUIRE(rep.firing_check.has_value());
  CHECK(*rep.firing_check == "linking_form");

  const CheckRecord* link = find_record(rep, "linking_form");
  REQUIRE(link != nullptr);
  CHECK(link->outcome == CheckOutcome::Obstructs);
  CHECK(input_value(*link, "residue") == "2");  // 2 is not a square mod 5

  const CheckRecord* n0 = find_record(rep, "n0_integrality");
  REQUIRE(n0 != nullptr);
  CHECK(n0->outcome == CheckOutcome::Obstructs);
  CHECK(input_value(*n0, "N0") == "-1/2");
}

TEST_CASE("classify(9): the gcd filter kills both signs at once") {
  ObstructionReport rep = classify(9);
  CHECK(rep.verdict == Verdict::Obstructed);
  REQUIRE(rep.firing_check.has_value());
  CHECK(*rep.firing_check == "homology_gcd");
  CHECK(rep.trace.size() == 1);
}

TEST_CASE("classify(-6): +k survives through the B2 root, -k is ruled out") {
  ObstructionReport rep = classify(-6);
  CHECK(rep.verdict == Verdict::NotObstructed);
  CHECK_FALSE(rep.firing_check.has_value());
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->find("T(2,-6)") != std::string::npos);

  const CheckRecord* quad = find_record(rep, "quadratic_roots", "+k");
  REQUIRE(quad != nullptr);
  CHECK(quad->outcome == CheckOutcome::Passes);
  CHECK(input_value(*quad, "B2_roots") == "[3]");
  CHECK(input_value(*quad, "k") == "2");

  // the -k pipeline concluded against its sign, but n survives, so its
  // records are not n-level obstructions
  const CheckRecord* even_minus = find_record(rep, "even_definiteness", "-k");
  REQUIRE(even_minus != nullptr);
  CHECK(even_minus->outcome == CheckOutcome::Inconclusive);
  CHECK_FALSE(input_value(*even_minus, "sign_verdict").empty());
  for (const CheckRecord& r : rep.trace) CHECK(r.outcome != CheckOutcome::Obstructs);
}

TEST_CASE("classify(-8): verdict comes from the linking form alone") {
  ObstructionReport rep = classify(-8);
  CHECK(rep.verdict == Verdict::Obstructed);
  REQUIRE(rep.firing_check.has_value());
  CHECK(*rep.firing_check == "linking_form");

  const CheckRecord* link = find_record(rep, "linking_form");
  REQUIRE(link != nullptr);
  CHECK(input_value(*link, "residue") == "5");  // 5 is not a square mod 8

  // N0 = 1 passes, and keeps the quadratic guard closed
  const CheckRecord* n0 = find_record(rep, "n0_integrality");
  REQUIRE(n0 != nullptr);
  CHECK(n0->outcome == CheckOutcome::Passes);
  CHECK(input_value(*n0, "N0") == "1");
  const CheckRecord* quad = find_record(rep, "quadratic_roots");
  REQUIRE(quad != nullptr);
  CHECK(quad->outcome == CheckOutcome::Inconclusive);

  // the even filter passes: negative targets keep a positive-definite option
  const CheckRecord* even = find_record(rep, "even_definiteness");
  REQUIRE(even != nullptr);
  CHECK(even->outcome == CheckOutcome::Passes);
}

TEST_CASE("classify(-13) and classify(11): linking form passes, N0 fires") {
  ObstructionReport rm13 = classify(-13);
  CHECK(rm13.verdict == Verdict::Obstructed);
  CHECK(*rm13.firing_check == "n0_integrality");
  const CheckRecord* link13 = find_record(rm13, "linking_form");
  REQUIRE(link13 != nullptr);
  CHECK(link13->outcome == CheckOutcome::Passes);
  const CheckRecord* n0_13 = find_record(rm13, "n0_integrality");
  REQUIRE(n0_13 != nullptr);
  CHECK(input_value(*n0_13, "N0") == "-1");

  ObstructionReport r11 = classify(11);
  CHECK(r11.verdict == Verdict::Obstructed);
  CHECK(*r11.firing_check == "n0_integrality");
  CHECK(find_record(r11, "linking_form")->outcome == CheckOutcome::Passes);
}

TEST_CASE("classify(13): quadratics deliver the only obstruction") {
  ObstructionReport r13 = classify(13);
  CHECK(r13.verdict == Verdict::Obstructed);
  CHECK(*r13.firing_check == "quadratic_roots");
  const CheckRecord* quad = find_record(r13, "quadratic_roots");
  REQUIRE(quad != nullptr);
  CHECK(input_value(*quad, "B3_roots") == "[]");
  CHECK(input_value(*quad, "B4_roots") == "[]");
  CHECK(input_value(*find_record(r13, "n0_integrality"), "N0") == "2");
}

TEST_CASE("classify(0) is an obstruction report, not an error") {
  ObstructionReport rep = classify(0);
  CHECK(rep.verdict == Verdict::Obstructed);
  REQUIRE(rep.firing_check.has_value());
  CHECK(*rep.firing_check == "torsion_free_homology");
}

TEST_CASE("classify(3): +1-surgery realizes it, -1 side stays open") {
  ObstructionReport rep = classify(3);
  CHECK(rep.verdict == Verdict::NotObstructed);
  const CheckRecord* n0_plus = find_record(rep, "n0_integrality", "+k");
  REQUIRE(n0_plus != nullptr);
  CHECK(n0_plus->outcome == CheckOutcome::Passes);
  CHECK(input_value(*n0_plus, "N0") == "0");
  // k = 1: the -k quadratic refinement cannot run
  const CheckRecord* quad_minus = find_record(rep, "quadratic_roots", "-k");
  REQUIRE(quad_minus != nullptr);
  CHECK(quad_minus->outcome == CheckOutcome::Inconclusive);
}

TEST_CASE("classify(4): even filter passes only for the realized case") {
  ObstructionReport rep = classify(4);
  CHECK(rep.verdict == Verdict::NotObstructed);
  const CheckRecord* even = find_record(rep, "even_definiteness");
  REQUIRE(even != nullptr);
  CHECK(even->outcome == CheckOutcome::Passes);
  CHECK_FALSE(rep.first_n0.has_value());  // even order: no N0 formula applies

  CHECK(classify(-4).verdict == Verdict::Obstructed);
  CHECK(classify(10).verdict == Verdict::Obstructed);
  CHECK(*classify(10).firing_check == "even_definiteness");
}

TEST_CASE("verdict matches the classification for |n| <= 500") {
  for (std::int64_t n = -500; n <= 500; ++n) {
    if (n == 0) continue;
    bool realizable =
        std::find(realizable_set().begin(), realizable_set().end(), n) != realizable_set().end();
    ObstructionReport rep = classify(n);
    CHECK((rep.verdict == Verdict::NotObstructed) == realizable);
  }
}

TEST_CASE("obstruction reports satisfy the trace contract") {
  for (std::int64_t n = -200; n <= 200; ++n) {
    ObstructionReport rep = classify(n);
    bool any_obstructs = false;
    for (const CheckRecord& r : rep.trace) {
      CHECK_FALSE(r.citation.empty());
      any_obstructs = any_obstructs || r.outcome == CheckOutcome::Obstructs;
    }
    CHECK((rep.verdict == Verdict::Obstructed) == any_obstructs);
    if (rep.verdict == Verdict::Obstructed) {
      REQUIRE(rep.firing_check.has_value());
      // re-running just the firing check reproduces the obstruction
      CHECK(rerun_check(n, *rep.firing_check) == CheckOutcome::Obstructs);
    } else {
      CHECK_FALSE(rep.firing_check.has_value());
    }
  }
}

TEST_CASE("witnesses accompany every realizable verdict") {
  for (std::int64_t n : realizable_set()) {
    ObstructionReport rep = classify(n);
    CHECK(rep.verdict == Verdict::NotObstructed);
    REQUIRE(rep.witness.has_value());
    CHECK_FALSE(rep.witness->empty());
  }
}

TEST_CASE("check order changes only the firing check, never the verdict") {
  bool firing_differs_somewhere = false;
  for (std::int64_t n = -120; n <= 120; ++n) {
    if (n == 0) continue;
    ObstructionReport standard = classify(n, CheckOrder::Standard);
    ObstructionReport permuted = classify(n, CheckOrder::LinkingFormAfterN0);
    CHECK(standard.verdict == permuted.verdict);
    if (standard.firing_check != permuted.firing_check) firing_differs_somewhere = true;
  }
  // n = 5 and friends are obstructed by both the linking form and N0, so the
  // permutation must be visible in at least one firing check
  CHECK(firing_differs_somewhere);
}

TEST_CASE("rerun_check rejects checks that cannot fire") {
  CHECK_THROWS_AS(rerun_check(5, "torsion_free_homology"), std::invalid_argument);
  CHECK_THROWS_AS(rerun_check(5, "homology_gcd"), std::invalid_argument);
  CHECK_THROWS_AS(rerun_check(5, "no_such_check"), std::invalid_argument);
  CHECK(rerun_check(9, "homology_gcd") == CheckOutcome::Obstructs);
  CHECK(rerun_check(-6, "even_definiteness[-k]") == CheckOutcome::Obstructs);
  CHECK(rerun_check(-6, "quadratic_roots[+k]") == CheckOutcome::Passes);
}

TEST_CASE("scan ranges and summaries") {
  ScanResult res = scan(-10, 10);
  CHECK(res.reports.size() == 20);  // n = 0 is skipped
  CHECK(res.summary.not_obstructed == std::vector<std::int64_t>{-6, -2, -1, 1, 2, 3, 4, 7});
  CHECK(res.summary.expected == res.summary.not_obstructed);
  CHECK(res.summary.matches_expected);

  ScanResult high = scan(20, 30);
  for (const ObstructionReport& rep : high.reports) CHECK(rep.verdict == Verdict::Obstructed);
  CHECK(high.summary.not_obstructed.empty());
  CHECK(high.summary.matches_expected);

  ScanResult single = scan(3, 3);
  CHECK(single.reports.size() == 1);
  CHECK(single.reports[0].n == 3);

  CHECK_THROWS_AS(scan(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(scan_serial(5, 4), std::invalid_argument);
}

TEST_CASE("parallel scan kernel agrees with the serial reference") {
  ScanResult parallel = scan(-150, 150, true);
  ScanResult serial = scan_serial(-150, 150);
  REQUIRE(parallel.reports.size() == serial.reports.size());
  for (std::size_t i = 0; i < serial.reports.size(); ++i) {
    const ObstructionReport& a = parallel.reports[i];
    const ObstructionReport& b = serial.reports[i];
    CHECK(a.n == b.n);
    CHECK(a.verdict == b.verdict);
    CHECK(a.firing_check == b.firing_check);
    CHECK(a.witness == b.witness);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t j = 0; j < a.trace.size(); ++j) {
      CHECK(a.trace[j].qualified_name() == b.trace[j].qualified_name());
      CHECK(a.trace[j].outcome == b.trace[j].outcome);
      CHECK(a.trace[j].inputs == b.trace[j].inputs);
    }
  }
  CHECK(parallel.summary.not_obstructed == serial.summary.not_obstructed);
}
