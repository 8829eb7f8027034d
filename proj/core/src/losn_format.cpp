#include "los/losn_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "los/errors.hpp"

namespace los {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool skippable(const std::string& line) { return line.empty() || line.front() == '#'; }

int to_int(std::string_view s, int line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ValidationError("line " + std::to_string(line_no) + ": expected integer, got '" +
                          std::string(s) + "'");
  }
  return v;
}

bool next_content_line(std::istream& in, int& line_no, std::string& line) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    line = trim(raw);
    if (!skippable(line)) return true;
  }
  return false;
}

}  // namespace

InstanceParams parse_losn_header(std::istream& in, int& line_no) {
  std::string line;
  if (!next_content_line(in, line_no, line) || line != "losn v1") {
    throw ValidationError("line " + std::to_string(line_no) + ": expected 'losn v1' header");
  }
  if (!next_content_line(in, line_no, line)) {
    throw ValidationError("missing parameter line");
  }
  InstanceParams params;
  bool have_d = false, have_omega = false, have_extents = false;
  std::istringstream fields(line);
  std::string field;
  while (fields >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("line " + std::to_string(line_no) + ": malformed field '" + field + "'");
    }
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "d") {
      params.d = to_int(value, line_no);
      have_d = true;
    } else if (key == "omega") {
      params.omega = to_int(value, line_no);
      have_omega = true;
    } else if (key == "extents") {
      std::size_t start = 0;
      while (start <= value.size()) {
        const auto comma = value.find(',', start);
        const auto end = comma == std::string::npos ? value.size() : comma;
        params.extents.push_back(to_int(std::string_view(value).substr(start, end - start), line_no));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      have_extents = true;
    } else {
      throw ValidationError("line " + std::to_string(line_no) + ": unknown field '" + key + "'");
    }
  }
  if (!have_d || !have_omega || !have_extents) {
    throw ValidationError("line " + std::to_string(line_no) + ": parameter line needs d, omega and extents");
  }
  params.validate();
  return params;
}

bool parse_losn_vertex_line(const std::string& raw, int d, int line_no, Vertex& out) {
  const std::string line = trim(raw);
  if (skippable(line)) return false;
  std::istringstream tokens(line);
  std::string tag;
  tokens >> tag;
  if (tag != "v") {
    throw ValidationError("line " + std::to_string(line_no) + ": expected vertex line 'v ...'");
  }
  std::vector<std::string> parts;
  std::string tok;
  while (tokens >> tok) parts.push_back(tok);
  if (static_cast<int>(parts.size()) != d + 1) {
    throw ValidationError("line " + std::to_string(line_no) + ": vertex needs " + std::to_string(d) +
                          " coordinates and a weight");
  }
  out.coords.assign(d, 0);
  for (int a = 0; a < d; ++a) out.coords[a] = to_int(parts[a], line_no);
  try {
    out.weight = Rational::parse(parts[d]);
  } catch (const ValidationError& e) {
    throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
  }
  return true;
}

LosInstance parse_losn(std::istream& in) {
  int line_no = 0;
  InstanceParams params = parse_losn_header(in, line_no);
  std::vector<Vertex> vertices;
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    Vertex v;
    if (parse_losn_vertex_line(raw, params.d, line_no, v)) vertices.push_back(std::move(v));
  }
  return LosInstance(std::move(params), std::move(vertices));
}

LosInstance parse_losn(const std::string& text) {
  std::istringstream in(text);
  return parse_losn(in);
}

LosInstance read_losn_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file '" + path + "'");
  return parse_losn(in);
}

std::string serialize_losn(const LosInstance& inst) {
  std::string out = "losn v1\n";
  out += "d=" + std::to_string(inst.d()) + " omega=" + std::to_string(inst.omega()) + " extents=";
  for (int a = 0; a < inst.d(); ++a) {
    if (a) out += ",";
    out += std::to_string(inst.extents()[a]);
  }
  out += "\n";
  for (const Vertex& v : inst.vertices()) {
    out += "v";
    for (int c : v.coords) out += " " + std::to_string(c);
    out += " " + v.weight.to_string() + "\n";
  }
  return out;
}

void write_losn_file(const LosInstance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write instance file '" + path + "'");
  out << serialize_losn(inst);
}

}  // namespace los
