#include "sz5/mgf.hpp"

#include <sstream>
#include <vector>

namespace sz5 {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Reads exactly the listed integers from a line; anything else is an error.
bool read_ints(const std::string& line, std::vector<long long>& out, std::size_t count) {
  std::istringstream in(line);
  out.clear();
  long long x = 0;
  while (in >> x) out.push_back(x);
  if (!in.eof()) return false;
  return out.size() == count;
}

}  // namespace

GraphDocument parse_graph(const std::string& text) {
  GraphDocument doc;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  enum class State { kHeader, kEdges, kAfterEdges, kRotation } state = State::kHeader;
  long long n = 0, m = 0;
  std::string rot_text;
  int rot_first_line = 0;
  std::vector<long long> xs;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      const std::string comment = trim(line.substr(hash + 1));
      if (comment.rfind("name:", 0) == 0) doc.name = trim(comment.substr(5));
      else if (comment.rfind("source:", 0) == 0) doc.source = trim(comment.substr(7));
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    switch (state) {
      case State::kHeader: {
        if (line.rfind("mgf", 0) != 0) throw ParseError(line_no, "expected header 'mgf <v> <e>'");
        if (!read_ints(line.substr(3), xs, 2) || xs[0] < 0 || xs[1] < 0) {
          throw ParseError(line_no, "bad header, expected 'mgf <v> <e>'");
        }
        n = xs[0];
        m = xs[1];
        doc.graph = Multigraph(static_cast<int>(n));
        state = m == 0 ? State::kAfterEdges : State::kEdges;
        break;
      }
      case State::kEdges: {
        if (!read_ints(line, xs, 2)) throw ParseError(line_no, "expected an edge line '<u> <v>'");
        if (xs[0] < 0 || xs[0] >= n || xs[1] < 0 || xs[1] >= n) throw ParseError(line_no, "edge endpoint out of range");
        if (xs[0] == xs[1]) throw ParseError(line_no, "loop at vertex " + std::to_string(xs[0]));
        doc.graph.add_edge(static_cast<Vertex>(xs[0]), static_cast<Vertex>(xs[1]));
        if (doc.graph.edge_count() == m) state = State::kAfterEdges;
        break;
      }
      case State::kAfterEdges: {
        if (line != "rot") throw ParseError(line_no, "unexpected content after the edge list");
        state = State::kRotation;
        rot_first_line = line_no + 1;
        break;
      }
      case State::kRotation:
        rot_text += line + "\n";
        break;
    }
  }
  if (state == State::kHeader) throw ParseError(line_no + 1, "missing header");
  if (state == State::kEdges) {
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(doc.graph.edge_count()));
  }
  if (state == State::kRotation) {
    try {
      doc.rotation = rotation_from_text(rot_text, doc.graph);
    } catch (const ParseError&) {
      throw;
    } catch (const GraphError& e) {
      throw ParseError(rot_first_line, std::string("rotation: ") + e.what());
    }
  }
  return doc;
}

std::string serialize_graph(const GraphDocument& doc) {
  std::ostringstream out;
  if (!doc.name.empty()) out << "# name: " << doc.name << '\n';
  if (!doc.source.empty()) out << "# source: " << doc.source << '\n';
  out << "mgf " << doc.graph.vertex_count() << ' ' << doc.graph.edge_count() << '\n';
  for (const Edge& e : doc.graph.edges()) out << e.a << ' ' << e.b << '\n';
  if (doc.rotation) out << "\nrot\n" << rotation_to_text(*doc.rotation);
  return out.str();
}

}  // namespace sz5
