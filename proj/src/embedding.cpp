#include <algorithm>
#include <map>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "sz5/planar.hpp"

namespace sz5 {

void validate_rotation(const Multigraph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.order.size()) != g.vertex_count()) {
    throw GraphError("rotation has " + std::to_string(rot.order.size()) + " vertices, graph has " +
                     std::to_string(g.vertex_count()));
  }
  std::vector<int> seen_a(g.edge_count(), 0), seen_b(g.edge_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (EdgeId e : rot.order[v]) {
      if (e < 0 || e >= g.edge_count()) throw GraphError("rotation names unknown edge " + std::to_string(e));
      const Edge& ed = g.edge(e);
      if (ed.a == v) ++seen_a[e];
      else if (ed.b == v) ++seen_b[e];
      else throw GraphError("rotation lists edge " + std::to_string(e) + " at non-endpoint " + std::to_string(v));
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (seen_a[e] != 1 || seen_b[e] != 1) {
      throw GraphError("edge " + std::to_string(e) + " must appear once at each endpoint of the rotation");
    }
  }
}

std::string rotation_to_text(const RotationSystem& rot) {
  std::ostringstream out;
  for (std::size_t v = 0; v < rot.order.size(); ++v) {
    out << v << ':';
    for (EdgeId e : rot.order[v]) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

RotationSystem rotation_from_text(const std::string& text, const Multigraph& g) {
  RotationSystem rot;
  rot.order.assign(g.vertex_count(), {});
  std::vector<char> given(g.vertex_count(), 0);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw GraphError("rotation line " + std::to_string(line_no) + ": missing ':'");
    std::istringstream head(line.substr(0, colon));
    int v = -1;
    if (!(head >> v) || v < 0 || v >= g.vertex_count()) {
      throw GraphError("rotation line " + std::to_string(line_no) + ": bad vertex");
    }
    if (given[v]) throw GraphError("rotation line " + std::to_string(line_no) + ": vertex listed twice");
    given[v] = 1;
    std::istringstream body(line.substr(colon + 1));
    std::string tok;
    while (body >> tok) {
      std::size_t used = 0;
      int e = -1;
      try {
        e = std::stoi(tok, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used != tok.size()) throw GraphError("rotation line " + std::to_string(line_no) + ": bad edge id");
      rot.order[v].push_back(e);
    }
  }
  validate_rotation(g, rot);
  return rot;
}

EmbedResult embed(const Multigraph& g) {
  using namespace boost;
  using Skeleton = adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>, property<edge_index_t, int>>;
  const int n = g.vertex_count();
  if (!g.is_connected()) throw GraphError("embedding needs a connected graph");
  EmbedResult out;
  if (n <= 1) {
    out.rotation = RotationSystem{std::vector<std::vector<EdgeId>>(n)};
    return out;
  }
  // Parallel classes keyed by (low, high).
  std::map<std::pair<Vertex, Vertex>, std::vector<EdgeId>> classes;
  for (const Edge& e : g.edges()) classes[{std::min(e.a, e.b), std::max(e.a, e.b)}].push_back(e.id);

  Skeleton sk(n);
  int idx = 0;
  for (const auto& [pair, ids] : classes) {
    auto [ed, ok] = add_edge(pair.first, pair.second, sk);
    put(edge_index, sk, ed, idx++);
  }
  using EdgeDesc = graph_traits<Skeleton>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> emb(n);
  std::vector<EdgeDesc> witness;
  const bool planar = boyer_myrvold_planarity_test(boyer_myrvold_params::graph = sk,
                                                   boyer_myrvold_params::embedding = &emb[0],
                                                   boyer_myrvold_params::kuratowski_subgraph =
                                                       std::back_inserter(witness));
  if (!planar) {
    for (const EdgeDesc& ed : witness) {
      const Vertex a = static_cast<Vertex>(source(ed, sk));
      const Vertex b = static_cast<Vertex>(target(ed, sk));
      out.kuratowski.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.kuratowski.begin(), out.kuratowski.end());
    return out;
  }
  RotationSystem rot;
  rot.order.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    for (const EdgeDesc& ed : emb[v]) {
      const Vertex a = static_cast<Vertex>(source(ed, sk));
      const Vertex b = static_cast<Vertex>(target(ed, sk));
      const Vertex w = a == v ? b : a;
      const auto& ids = classes.at({std::min(v, w), std::max(v, w)});
      if (v < w) rot.order[v].insert(rot.order[v].end(), ids.begin(), ids.end());
      else rot.order[v].insert(rot.order[v].end(), ids.rbegin(), ids.rend());
    }
  }
  validate_rotation(g, rot);
  out.rotation = std::move(rot);
  return out;
}

}  // namespace sz5
