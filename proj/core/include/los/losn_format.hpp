#pragma once

#include <iosfwd>
#include <string>

#include "los/instance.hpp"

namespace los {

// .losn text format:
//
//   losn v1
//   d=<int> omega=<int> extents=<int>,<int>[,...]
//   v <c1> ... <cd> <weight>        (one line per vertex)
//
// Lines starting with '#' and blank lines are ignored. Weights are decimals
// or p/q. Output lists vertices in lexicographic coordinate order, integer
// weights as plain integers and the rest as p/q.

/// Parses the two header lines. Exposed for the streaming reader.
InstanceParams parse_losn_header(std::istream& in, int& line_no);

/// Parses one vertex line ("v ..."). Returns false for comment/blank lines.
bool parse_losn_vertex_line(const std::string& line, int d, int line_no, Vertex& out);

LosInstance parse_losn(std::istream& in);
LosInstance parse_losn(const std::string& text);
LosInstance read_losn_file(const std::string& path);

std::string serialize_losn(const LosInstance& inst);
void write_losn_file(const LosInstance& inst, const std::string& path);

}  // namespace los
