#include "sz5/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace sz5 {

Multigraph::Multigraph(int vertex_count) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  incident_.resize(vertex_count);
}

Multigraph::Multigraph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges)
    : Multigraph(vertex_count) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

Multigraph Multigraph::from_multiplicities(int vertex_count, std::span<const int> upper) {
  if (static_cast<int>(upper.size()) != pair_count(vertex_count)) {
    throw GraphError("multiplicity vector has wrong length");
  }
  Multigraph g(vertex_count);
  std::size_t idx = 0;
  for (Vertex u = 0; u < vertex_count; ++u) {
    for (Vertex v = u + 1; v < vertex_count; ++v, ++idx) {
      if (upper[idx] < 0) throw GraphError("negative multiplicity");
      for (int k = 0; k < upper[idx]; ++k) g.add_edge(u, v);
    }
  }
  return g;
}

void Multigraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
}

EdgeId Multigraph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
  const EdgeId id = edge_count();
  edges_.push_back({id, a, b});
  incident_[a].push_back(id);
  incident_[b].push_back(id);
  return id;
}

const Edge& Multigraph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw GraphError("edge " + std::to_string(e) + " out of range");
  return edges_[e];
}

const std::vector<EdgeId>& Multigraph::incident(Vertex v) const {
  check_vertex(v);
  return incident_[v];
}

int Multigraph::degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("multiplicity of a vertex with itself");
  int count = 0;
  for (EdgeId e : incident_[u]) {
    if (edges_[e].other(u) == v) ++count;
  }
  return count;
}

int Multigraph::max_multiplicity() const {
  const auto mult = multiplicity_vector();
  return mult.empty() ? 0 : *std::max_element(mult.begin(), mult.end());
}

int Multigraph::min_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    best = v == 0 ? degree(v) : std::min(best, degree(v));
  }
  return best;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> out(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v) out[v] = degree(v);
  return out;
}

int pair_index(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::vector<int> Multigraph::multiplicity_vector() const {
  const int n = vertex_count();
  std::vector<int> out(pair_count(n), 0);
  for (const Edge& e : edges_) ++out[pair_index(n, e.a, e.b)];
  return out;
}

std::vector<int> Multigraph::multiplicity_matrix() const {
  const int n = vertex_count();
  std::vector<int> out(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : edges_) {
    ++out[e.a * n + e.b];
    ++out[e.b * n + e.a];
  }
  return out;
}

int Multigraph::cut_size(std::span<const Vertex> side) const {
  std::vector<char> in(vertex_count(), 0);
  for (Vertex v : side) {
    check_vertex(v);
    in[v] = 1;
  }
  int count = 0;
  for (const Edge& e : edges_) count += in[e.a] != in[e.b];
  return count;
}

std::vector<int> Multigraph::components() const {
  const int n = vertex_count();
  std::vector<int> label(n, -1);
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::queue<Vertex> todo;
    todo.push(s);
    label[s] = next;
    while (!todo.empty()) {
      const Vertex u = todo.front();
      todo.pop();
      for (EdgeId e : incident_[u]) {
        const Vertex w = edges_[e].other(u);
        if (label[w] < 0) {
          label[w] = next;
          todo.push(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool Multigraph::is_connected() const {
  const auto label = components();
  return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

ContractResult quotient_by_labels(const Multigraph& g, std::span<const int> labels) {
  const int n = g.vertex_count();
  if (static_cast<int>(labels.size()) != n) throw GraphError("label vector has wrong length");
  // Renumber classes by smallest member.
  std::vector<int> renumber;
  std::vector<int> seen_label;
  ContractResult out;
  out.vertex_map.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    auto it = std::find(seen_label.begin(), seen_label.end(), labels[v]);
    if (it == seen_label.end()) {
      seen_label.push_back(labels[v]);
      out.vertex_map[v] = static_cast<int>(seen_label.size()) - 1;
    } else {
      out.vertex_map[v] = static_cast<int>(it - seen_label.begin());
    }
  }
  out.graph = Multigraph(static_cast<int>(seen_label.size()));
  out.edge_map.assign(g.edge_count(), kRemovedEdge);
  for (const Edge& e : g.edges()) {
    const Vertex a = out.vertex_map[e.a];
    const Vertex b = out.vertex_map[e.b];
    if (a != b) out.edge_map[e.id] = out.graph.add_edge(a, b);
  }
  return out;
}

ContractResult contract(const Multigraph& g, std::span<const Vertex> s) {
  if (s.empty()) throw GraphError("contracting an empty vertex set");
  const VertexSet one(s.begin(), s.end());
  return contract_sets(g, std::span<const VertexSet>(&one, 1));
}

ContractResult contract_sets(const Multigraph& g, std::span<const VertexSet> sets) {
  std::vector<int> labels(g.vertex_count());
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto& set : sets) {
    if (set.empty()) throw GraphError("contracting an empty vertex set");
    const Vertex rep = *std::min_element(set.begin(), set.end());
    for (Vertex v : set) {
      if (v < 0 || v >= g.vertex_count()) throw GraphError("vertex out of range in contraction");
      if (used[v]) throw GraphError("contraction sets overlap");
      used[v] = 1;
      labels[v] = rep;
    }
  }
  return quotient_by_labels(g, labels);
}

SubgraphResult induced_subgraph(const Multigraph& g, std::span<const Vertex> s) {
  SubgraphResult out;
  out.vertices.assign(s.begin(), s.end());
  std::sort(out.vertices.begin(), out.vertices.end());
  if (std::adjacent_find(out.vertices.begin(), out.vertices.end()) != out.vertices.end()) {
    throw GraphError("duplicate vertex in induced subgraph");
  }
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    const Vertex v = out.vertices[i];
    if (v < 0 || v >= g.vertex_count()) throw GraphError("vertex out of range in induced subgraph");
    local[v] = static_cast<int>(i);
  }
  out.graph = Multigraph(static_cast<int>(out.vertices.size()));
  for (const Edge& e : g.edges()) {
    if (local[e.a] >= 0 && local[e.b] >= 0) {
      out.graph.add_edge(local[e.a], local[e.b]);
      out.edge_map.push_back(e.id);
    }
  }
  return out;
}

LiftResult lift_paths(const Multigraph& g, std::span<const LiftPath> paths) {
  std::vector<char> removed(g.edge_count(), 0);
  for (const LiftPath& p : paths) {
    if (p.vertices.size() < 2 || p.edges.size() + 1 != p.vertices.size()) {
      throw GraphError("malformed lift path");
    }
    if (p.vertices.front() == p.vertices.back()) {
      throw GraphError("lifting a closed path would create a loop");
    }
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      const Edge& e = g.edge(p.edges[i]);
      const Vertex x = p.vertices[i];
      const Vertex y = p.vertices[i + 1];
      if (!((e.a == x && e.b == y) || (e.a == y && e.b == x))) {
        throw GraphError("edge " + std::to_string(e.id) + " does not join consecutive path vertices");
      }
      if (removed[e.id]) throw GraphError("lift paths reuse edge " + std::to_string(e.id));
      removed[e.id] = 1;
    }
  }
  LiftResult out;
  out.graph = Multigraph(g.vertex_count());
  out.edge_map.assign(g.edge_count(), kRemovedEdge);
  for (const Edge& e : g.edges()) {
    if (!removed[e.id]) out.edge_map[e.id] = out.graph.add_edge(e.a, e.b);
  }
  for (const LiftPath& p : paths) {
    out.new_edges.push_back(out.graph.add_edge(p.vertices.front(), p.vertices.back()));
  }
  return out;
}

LiftResult lift_path(const Multigraph& g, const LiftPath& path) {
  return lift_paths(g, std::span<const LiftPath>(&path, 1));
}

}  // namespace sz5
