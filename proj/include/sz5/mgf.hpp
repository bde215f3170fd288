#pragma once

#include <optional>
#include <string>

#include "sz5/multigraph.hpp"
#include "sz5/planar.hpp"

namespace sz5 {

/// Text format:
///   # name: <text>        optional metadata comments
///   # source: <text>
///   mgf <v> <e>
///   <u> <v>               e lines, one per parallel edge, 0-indexed
///   rot                   optional block, one "v: e_i e_j ..." line per vertex
/// Other '#' comments and blank lines are ignored.
struct GraphDocument {
  Multigraph graph;
  std::optional<RotationSystem> rotation;
  std::string name;
  std::string source;
};

class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

GraphDocument parse_graph(const std::string& text);
std::string serialize_graph(const GraphDocument& doc);

}  // namespace sz5
