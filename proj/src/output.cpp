#include "lensband/output.hpp"

namespace lensband {

Json to_json(const OutputRecord& rec) {
  Json j;
  j["command"] = rec.command;
  Json inputs = Json::object();
  for (const auto& [key, value] : rec.inputs) inputs[key] = value;
  j["inputs"] = std::move(inputs);
  j["result"] = rec.result;
  j["citations"] = rec.citations;
  return j;
}

Json to_json(const CheckRecord& rec) {
  Json j;
  j["check"] = rec.name;
  if (!rec.branch.empty()) j["branch"] = rec.branch;
  Json inputs = Json::object();
  for (const auto& [key, value] : rec.inputs) inputs[key] = value;
  j["inputs"] = std::move(inputs);
  j["outcome"] = to_string(rec.outcome);
  j["citation"] = rec.citation;
  return j;
}

Json to_json(const ObstructionReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["verdict"] = to_string(rep.verdict);
  if (rep.firing_check) j["firing_check"] = *rep.firing_check;
  if (rep.first_n0) j["N0"] = rep.first_n0->str();
  if (rep.witness) j["witness"] = *rep.witness;
  Json trace = Json::array();
  for (const CheckRecord& r : rep.trace) trace.push_back(to_json(r));
  j["trace"] = std::move(trace);
  return j;
}

Json to_json(const ScanResult& res) {
  Json j;
  j["from"] = res.summary.lo;
  j["to"] = res.summary.hi;
  Json reports = Json::array();
  for (const ObstructionReport& r : res.reports) reports.push_back(to_json(r));
  j["reports"] = std::move(reports);
  Json summary;
  summary["not_obstructed"] = res.summary.not_obstructed;
  summary["expected"] = res.summary.expected;
  summary["matches_expected"] = res.summary.matches_expected;
  j["summary"] = std::move(summary);
  return j;
}

Json to_json(const BandVerdict& v) {
  Json j;
  j["possible"] = v.possible;
  j["reason"] = to_string(v.reason);
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string scan_csv_header() { return "n,verdict,firing_check,N0,witness\n"; }

std::string scan_csv_row(const ObstructionReport& rep) {
  std::string row = std::to_string(rep.n);
  row += ',';
  row += to_string(rep.verdict);
  row += ',';
  row += csv_escape(rep.firing_check.value_or(""));
  row += ',';
  row += csv_escape(rep.first_n0 ? rep.first_n0->str() : "");
  row += ',';
  row += csv_escape(rep.witness.value_or(""));
  row += '\n';
  return row;
}

}  // namespace lensband
