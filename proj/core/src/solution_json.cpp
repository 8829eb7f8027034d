#include "los/solution_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "los/errors.hpp"

namespace los {
namespace {

using Json = nlohmann::ordered_json;

Json solution_node(const Solution& sol, bool with_float) {
  Json j;
  j["algorithm"] = sol.algorithm;
  j["weight"] = sol.total_weight.to_fraction_string();
  if (with_float) j["weight_float"] = sol.total_weight.to_double();
  Json vs = Json::array();
  for (const Coords& c : sol.vertices) vs.push_back(c);
  j["vertices"] = std::move(vs);
  Json meta = Json::object();
  for (const auto& [key, value] : sol.meta) {
    std::visit([&](const auto& v) { meta[key] = v; }, value);
  }
  j["meta"] = std::move(meta);
  return j;
}

}  // namespace

std::string solution_to_json(const Solution& sol, bool with_float, int indent) {
  return solution_node(sol, with_float).dump(indent);
}

Solution solution_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("solution JSON does not parse: ") + e.what());
  }
  // A RunReport wraps the solution.
  if (j.is_object() && j.contains("solution")) j = j["solution"];
  if (!j.is_object()) throw ValidationError("solution JSON must be an object");
  for (const char* key : {"algorithm", "weight", "vertices"}) {
    if (!j.contains(key)) throw ValidationError(std::string("solution JSON lacks \"") + key + "\"");
  }
  Solution sol;
  try {
    sol.algorithm = j["algorithm"].get<std::string>();
    sol.total_weight = Rational::parse(j["weight"].get<std::string>());
    for (const auto& v : j["vertices"]) sol.vertices.push_back(v.get<Coords>());
    if (j.contains("meta")) {
      for (const auto& [key, value] : j["meta"].items()) {
        if (value.is_number_integer()) {
          sol.set_meta(key, value.get<std::int64_t>());
        } else if (value.is_string()) {
          sol.set_meta(key, value.get<std::string>());
        } else {
          sol.set_meta(key, value.dump());
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed solution JSON: ") + e.what());
  }
  return sol;
}

Solution read_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open solution file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return solution_from_json(buf.str());
}

std::string digest_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

std::string run_report_json(const RunReport& report, int indent) {
  Json j;
  j["command"] = report.command;
  j["digest"] = report.digest;
  Json params = Json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  j["params"] = std::move(params);
  j["solution"] = solution_node(report.solution, report.with_float);
  if (report.wall_ms) j["wall_ms"] = *report.wall_ms;
  return j.dump(indent);
}

}  // namespace los
