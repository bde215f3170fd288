#include "fixtures.hpp"

#include <stdexcept>

namespace fixtures {

Multigraph named(const char* text) { return sz5::make_named(sz5::NamedPattern::parse(text)); }

sz5::EdgeId edge_between(const Multigraph& g, int u, int v, int skip) {
  for (const sz5::Edge& e : g.edges()) {
    if (((e.a == u && e.b == v) || (e.a == v && e.b == u)) && skip-- == 0) return e.id;
  }
  throw std::invalid_argument("no such edge");
}

Multigraph lift_example() {
  Multigraph g(5);
  auto add = [&g](int u, int v, int mult) {
    for (int i = 0; i < mult; ++i) g.add_edge(u, v);
  };
  add(0, 3, 2);
  add(0, 4, 2);
  add(3, 4, 3);
  add(0, 1, 2);
  add(0, 2, 1);
  add(1, 2, 3);
  add(1, 3, 1);
  add(2, 3, 1);
  add(2, 4, 2);
  return g;
}

Multigraph two_path_plane() {
  Multigraph g(5);
  for (auto [u, v] : {std::pair{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}, {3, 1}, {3, 0}, {4, 2}, {4, 0}}) {
    g.add_edge(u, v);
  }
  return g;
}

sz5::RotationSystem two_path_plane_rotation() {
  // Counterclockwise orders for x top, y bottom left, z bottom right, u left
  // of xy, v right of xz.
  sz5::RotationSystem rot;
  rot.order = {{7, 1, 0, 4, 5, 9}, {3, 2, 0, 1, 6}, {8, 5, 4, 2, 3}, {7, 6}, {9, 8}};
  return rot;
}

Multigraph random_connected(std::mt19937_64& rng, int n, int extra_edges, int mu_max) {
  Multigraph g(n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.add_edge(pick(rng), v);
  }
  if (n < 2) return g;
  std::uniform_int_distribution<int> vert(0, n - 1);
  for (int i = 0, tries = 0; i < extra_edges && tries < 50 * (extra_edges + 1); ++tries) {
    const int u = vert(rng), v = vert(rng);
    if (u == v || g.multiplicity(u, v) >= mu_max) continue;
    g.add_edge(u, v);
    ++i;
  }
  return g;
}

sz5::VertexPartition random_partition(std::mt19937_64& rng, int n, int max_parts) {
  std::uniform_int_distribution<int> label(0, std::max(0, max_parts - 1));
  std::vector<int> labels(n);
  for (int& x : labels) x = label(rng);
  return sz5::VertexPartition::from_labels(labels);
}

sz5::Orientation random_orientation(std::mt19937_64& rng, const Multigraph& g) {
  sz5::Orientation d;
  std::bernoulli_distribution coin(0.5);
  for (const sz5::Edge& e : g.edges()) d.tail.push_back(coin(rng) ? e.a : e.b);
  return d;
}

sz5::Boundary random_boundary(std::mt19937_64& rng, int k, int n) {
  std::uniform_int_distribution<int> res(0, k - 1);
  std::vector<int> values(n, 0);
  int sum = 0;
  for (int v = 0; v + 1 < n; ++v) {
    values[v] = res(rng);
    sum += values[v];
  }
  values[n - 1] = sz5::mod(-sum, k);
  return sz5::Boundary(k, values);
}

std::vector<Multigraph> small_corpus(int max_edges, int mu_max) {
  std::vector<Multigraph> out;
  for (int n = 2; n <= 4; ++n) {
    sz5::EnumerationBounds b;
    b.vertex_count = n;
    b.min_edges = n - 1;
    b.max_edges = max_edges;
    b.mu_max = mu_max;
    b.connected = true;
    for (Multigraph& g : sz5::enumerate_class(b)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace fixtures
