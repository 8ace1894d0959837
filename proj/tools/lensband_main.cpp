#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lensband/band.hpp"
#include "lensband/classify.hpp"
#include "lensband/lens.hpp"
#include "lensband/linkform.hpp"
#include "lensband/output.hpp"

namespace {

using namespace lensband;

constexpr const char* kCiteRecursion =
    "recursive correction-term formula d(L(p,q), i) = -1/4 + (2i+1-p-q)^2/(4pq) - "
    "d(L(q, p mod q), i mod q)";
constexpr const char* kCiteOrientation = "d-invariants change sign under orientation reversal";
constexpr const char* kCiteSpins =
    "the self-conjugate structures are the integers among (p+q-1)/2 and (q-1)/2";
constexpr const char* kCiteFilling =
    "the filling slope (3k±1)m + k*l carries linking form k/|n|";
constexpr const char* kCiteFormEquiv =
    "linking forms q/p and q'/p are equivalent iff q = q'a^2 (mod p) for a unit a";
constexpr const char* kCiteTheorem =
    "L(n,1) arises from a distance-one surgery on a knot in L(3,1) iff n is one of "
    "-6, -2, -1, 1, 2, 3, 4, 7";
constexpr const char* kCiteParity =
    "a coherent banding changes the number of link components; a non-coherent one preserves it";
constexpr const char* kCiteMontesinos =
    "branched double covers turn bandings between T(2,3) and T(2,n) into distance-one surgeries "
    "from L(3,1) to L(n,1)";

void emit(const OutputRecord& rec) { std::cout << render_json(to_json(rec)); }

std::vector<std::string> trace_citations(const ObstructionReport& rep) {
  std::vector<std::string> cites;
  for (const CheckRecord& r : rep.trace) {
    if (std::find(cites.begin(), cites.end(), r.citation) == cites.end()) {
      cites.push_back(r.citation);
    }
  }
  return cites;
}

void print_record_line(const CheckRecord& r) {
  std::cout << "  [" << to_string(r.outcome) << "] " << r.qualified_name() << ": ";
  bool first = true;
  for (const auto& [key, value] : r.inputs) {
    if (!first) std::cout << ", ";
    std::cout << key << "=" << value;
    first = false;
  }
  std::cout << "\n";
}

void print_report(const ObstructionReport& rep, bool with_trace) {
  std::cout << "n = " << rep.n << ": " << to_string(rep.verdict);
  if (rep.verdict == Verdict::Obstructed && rep.firing_check) {
    std::cout << " (firing check: " << *rep.firing_check << ")";
  }
  if (rep.witness) std::cout << " (witness: " << *rep.witness << ")";
  std::cout << "\n";
  if (with_trace) {
    for (const CheckRecord& r : rep.trace) print_record_line(r);
  }
}

int run_d(std::int64_t p, std::int64_t q, std::optional<std::int64_t> spin, bool all, bool json) {
  NormalizedLens norm = normalize(p, q);
  const LensSpace& L = norm.space;
  if (!spin && !all) all = true;

  std::vector<std::int64_t> indices;
  if (all) {
    for (std::int64_t i = 0; i < L.p; ++i) indices.push_back(i);
  } else {
    if (*spin < 0 || *spin >= L.p) {
      std::cerr << "error: spin index must lie in [0, " << L.p << ")\n";
      return 2;
    }
    indices.push_back(*spin);
  }

  if (json) {
    OutputRecord rec;
    rec.command = "d";
    rec.inputs = {{"p", std::to_string(p)}, {"q", std::to_string(q)}};
    if (spin) rec.inputs.emplace_back("spin", std::to_string(*spin));
    if (all) rec.inputs.emplace_back("all", "true");
    Json result;
    result["p"] = L.p;
    result["q"] = L.q;
    result["orientation_reversed"] = norm.orientation_reversed;
    Json values = Json::array();
    for (std::int64_t i : indices) {
      Json v;
      v["spin"] = i;
      v["d"] = d_invariant(L, i).str();
      values.push_back(std::move(v));
    }
    result["values"] = std::move(values);
    rec.result = std::move(result);
    rec.citations = {kCiteRecursion};
    if (norm.orientation_reversed) rec.citations.push_back(kCiteOrientation);
    emit(rec);
    return 0;
  }

  if (norm.orientation_reversed) {
    std::cout << "-L(" << -p << "," << q << ") = L(" << L.p << "," << L.q << ")\n";
  }
  for (std::int64_t i : indices) {
    std::cout << "d(L(" << L.p << "," << L.q << "), " << i << ") = " << d_invariant(L, i).str()
              << "\n";
  }
  return 0;
}

int run_spins(std::int64_t p, std::int64_t q, bool json) {
  NormalizedLens norm = normalize(p, q);
  auto spins = self_conjugate_spins(norm.space);
  if (json) {
    OutputRecord rec;
    rec.command = "spins";
    rec.inputs = {{"p", std::to_string(p)}, {"q", std::to_string(q)}};
    Json result;
    result["p"] = norm.space.p;
    result["q"] = norm.space.q;
    result["self_conjugate"] = spins;
    rec.result = std::move(result);
    rec.citations = {kCiteSpins};
    emit(rec);
    return 0;
  }
  std::cout << "self-conjugate Spin^c structures on L(" << norm.space.p << "," << norm.space.q
            << "):";
  for (std::int64_t s : spins) std::cout << " " << s;
  std::cout << "\n";
  return 0;
}

int run_linkform(std::int64_t n, bool json) {
  std::int64_t a = n < 0 ? -n : n;
  if (a % 3 == 0) {
    std::cerr << "error: |n| = 0 (mod 3) has no homologically essential filling form\n";
    return 2;
  }
  LinkingForm filling = filling_linking_form(n);
  LinkingForm target = target_linking_form(n);
  bool eq = linking_forms_equivalent(filling, target);
  if (json) {
    OutputRecord rec;
    rec.command = "linkform";
    rec.inputs = {{"n", std::to_string(n)}};
    Json result;
    result["filling"] = filling.str();
    result["target"] = target.str();
    result["equivalent"] = eq;
    rec.result = std::move(result);
    rec.citations = {kCiteFilling, kCiteFormEquiv};
    emit(rec);
    return 0;
  }
  std::cout << "filling form: " << filling.str() << "\n";
  std::cout << "target form:  " << target.str() << "\n";
  std::cout << "equivalent:   " << (eq ? "true" : "false") << "\n";
  return 0;
}

int run_classify(std::int64_t n, bool trace, bool json) {
  ObstructionReport rep = classify(n);
  if (json) {
    OutputRecord rec;
    rec.command = "classify";
    rec.inputs = {{"n", std::to_string(n)}};
    rec.result = to_json(rep);
    rec.citations = trace_citations(rep);
    emit(rec);
    return 0;
  }
  print_report(rep, trace);
  return 0;
}

int run_scan(std::int64_t lo, std::int64_t hi, bool check_theorem, bool csv, bool json) {
  ScanResult res = scan(lo, hi);
  int status = check_theorem && !res.summary.matches_expected ? 1 : 0;

  if (csv) {
    std::cout << scan_csv_header();
    for (const ObstructionReport& rep : res.reports) std::cout << scan_csv_row(rep);
    return status;
  }
  if (json) {
    OutputRecord rec;
    rec.command = "scan";
    rec.inputs = {{"from", std::to_string(lo)}, {"to", std::to_string(hi)}};
    if (check_theorem) rec.inputs.emplace_back("check-theorem", "true");
    rec.result = to_json(res);
    rec.citations = {kCiteTheorem};
    emit(rec);
    return status;
  }

  for (const ObstructionReport& rep : res.reports) print_report(rep, false);
  std::cout << "not obstructed:";
  for (std::int64_t n : res.summary.not_obstructed) std::cout << " " << n;
  std::cout << "\nexpected:      ";
  for (std::int64_t n : res.summary.expected) std::cout << " " << n;
  std::cout << "\nmatch: " << (res.summary.matches_expected ? "yes" : "no") << "\n";
  if (check_theorem) {
    std::cout << "theorem check: " << (res.summary.matches_expected ? "PASS" : "FAIL") << "\n";
  }
  return status;
}

int run_band(std::int64_t n, bool coherent, bool json) {
  BandVerdict v = banding_possible(n, coherent);
  if (json) {
    OutputRecord rec;
    rec.command = "band";
    rec.inputs = {{"n", std::to_string(n)},
                  {"coherence", coherent ? "coherent" : "non-coherent"}};
    rec.result = to_json(v);
    rec.citations = {kCiteParity, kCiteMontesinos};
    emit(rec);
    return 0;
  }
  std::cout << "T(2,3) -> T(2," << n << ") by a " << (coherent ? "coherent" : "non-coherent")
            << " banding: " << (v.possible ? "possible" : "impossible") << " ("
            << to_string(v.reason) << ")";
  if (v.witness) std::cout << "\n  witness: " << *v.witness;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact d-invariants of lens spaces and the distance-one surgery "
               "obstruction pipeline for L(3,1) -> L(n,1)"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a machine-readable record");

  auto* cmd_d = app.add_subcommand("d", "d-invariants of L(p,q)");
  cmd_d->fallthrough();
  std::int64_t d_p = 0, d_q = 0;
  std::int64_t d_spin_value = 0;
  bool d_all = false;
  cmd_d->add_option("--p", d_p, "order p (negative for the reversed orientation)")->required();
  cmd_d->add_option("--q", d_q, "q")->required();
  auto* d_spin_opt = cmd_d->add_option("--spin", d_spin_value, "single Spin^c index");
  cmd_d->add_flag("--all", d_all, "all Spin^c indices");

  auto* cmd_spins = app.add_subcommand("spins", "self-conjugate Spin^c structures of L(p,q)");
  cmd_spins->fallthrough();
  std::int64_t s_p = 0, s_q = 0;
  cmd_spins->add_option("--p", s_p, "order p")->required();
  cmd_spins->add_option("--q", s_q, "q")->required();

  auto* cmd_linkform = app.add_subcommand("linkform", "filling vs target linking forms for n");
  cmd_linkform->fallthrough();
  std::int64_t lf_n = 0;
  cmd_linkform->add_option("--n", lf_n, "target parameter n (|n| = 1 or 2 mod 3)")->required();

  auto* cmd_classify = app.add_subcommand("classify", "obstruction verdict for L(n,1)");
  cmd_classify->fallthrough();
  std::int64_t c_n = 0;
  bool c_trace = false;
  cmd_classify->add_option("--n", c_n, "target parameter n")->required();
  cmd_classify->add_flag("--trace", c_trace, "print every check record");

  auto* cmd_scan = app.add_subcommand("scan", "classify every n in a range");
  cmd_scan->fallthrough();
  std::int64_t sc_from = 0, sc_to = 0;
  bool sc_check = false, sc_csv = false;
  cmd_scan->add_option("--from", sc_from, "range start")->required();
  cmd_scan->add_option("--to", sc_to, "range end")->required();
  cmd_scan->add_flag("--check-theorem", sc_check,
                     "exit 0 iff the surviving set matches the classification");
  cmd_scan->add_flag("--csv", sc_csv, "emit CSV rows");

  auto* cmd_band = app.add_subcommand("band", "banding verdict for T(2,3) -> T(2,n)");
  cmd_band->fallthrough();
  std::int64_t b_n = 0;
  bool b_coherent = false, b_noncoherent = false;
  cmd_band->add_option("--n", b_n, "torus link parameter n")->required();
  cmd_band->add_flag("--coherent", b_coherent, "coherent banding");
  cmd_band->add_flag("--non-coherent", b_noncoherent, "non-coherent banding");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_d->parsed()) {
      if (*d_spin_opt && d_all) {
        std::cerr << "error: --spin and --all are mutually exclusive\n";
        return 2;
      }
      std::optional<std::int64_t> spin;
      if (*d_spin_opt) spin = d_spin_value;
      return run_d(d_p, d_q, spin, d_all, json);
    }
    if (cmd_spins->parsed()) return run_spins(s_p, s_q, json);
    if (cmd_linkform->parsed()) return run_linkform(lf_n, json);
    if (cmd_classify->parsed()) return run_classify(c_n, c_trace, json);
    if (cmd_scan->parsed()) {
      if (sc_csv && json) {
        std::cerr << "error: --csv and --json are mutually exclusive\n";
        return 2;
      }
      if (sc_from > sc_to) {
        std::cerr << "error: --from must be <= --to\n";
        return 2;
      }
      return run_scan(sc_from, sc_to, sc_check, sc_csv, json);
    }
    if (cmd_band->parsed()) {
      if (b_coherent == b_noncoherent) {
        std::cerr << "error: exactly one of --coherent / --non-coherent is required\n";
        return 2;
      }
      return run_band(b_n, b_coherent, json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
