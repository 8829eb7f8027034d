#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "los/instance.hpp"

namespace los {

// Solution JSON, keys in this order:
//   {"algorithm": str, "weight": "p/q", "vertices": [[ints]], "meta": {...}}
// With with_float, "weight_float" (a double) follows "weight".
std::string solution_to_json(const Solution& sol, bool with_float = false, int indent = -1);
Solution solution_from_json(const std::string& text);
Solution read_solution_file(const std::string& path);

/// FNV-1a 64 over the text, as 16 lowercase hex digits.
std::string digest_hex(const std::string& text);

/// Everything `los solve --json` prints.
struct RunReport {
  std::string command;
  std::string digest;
  std::vector<std::pair<std::string, std::string>> params;  // in insertion order
  Solution solution;
  bool with_float = false;
  std::optional<double> wall_ms;  // only printed when set
};

std::string run_report_json(const RunReport& report, int indent = 2);

}  // namespace los
