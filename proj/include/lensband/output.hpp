#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lensband/band.hpp"
#include "lensband/classify.hpp"

namespace lensband {

using Json = nlohmann::ordered_json;

/// Machine-readable envelope for every CLI invocation. Serializes with stable
/// key order; rationals are rendered exactly (never as decimals).
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  Json result;
  std::vector<std::string> citations;
};

Json to_json(const OutputRecord& rec);
Json to_json(const CheckRecord& rec);
Json to_json(const ObstructionReport& rep);
Json to_json(const ScanResult& res);
Json to_json(const BandVerdict& v);

/// Canonical rendering: two-space indent plus trailing newline. Parsing the
/// output and re-rendering it reproduces the bytes exactly.
std::string render_json(const Json& j);

/// Scan CSV: header "n,verdict,firing_check,N0,witness" plus one row per n.
std::string scan_csv_header();
std::string scan_csv_row(const ObstructionReport& rep);

std::string csv_escape(const std::string& field);

}  // namespace lensband
