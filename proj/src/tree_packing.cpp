#include <queue>

#include "sz5/partition.hpp"

namespace sz5 {

namespace {

// Edges of forest i on the path between u and v, or nullopt if u and v lie in
// different trees of that forest.
std::optional<std::vector<EdgeId>> forest_path(const Multigraph& g, const std::vector<int>& owner,
                                               int forest, Vertex u, Vertex v) {
  const int n = g.vertex_count();
  std::vector<EdgeId> via(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<Vertex> todo;
  todo.push(u);
  seen[u] = 1;
  while (!todo.empty()) {
    const Vertex x = todo.front();
    todo.pop();
    if (x == v) break;
    for (EdgeId e : g.incident(x)) {
      if (owner[e] != forest) continue;
      const Vertex y = g.edge(e).other(x);
      if (seen[y]) continue;
      seen[y] = 1;
      via[y] = e;
      todo.push(y);
    }
  }
  if (!seen[v]) return std::nullopt;
  std::vector<EdgeId> path;
  for (Vertex x = v; x != u;) {
    path.push_back(via[x]);
    x = g.edge(via[x]).other(x);
  }
  return path;
}

// Tries to insert `root` into the union of `k` forests by a shortest
// augmenting path. Returns true on success.
bool augment(const Multigraph& g, std::vector<int>& owner, int k, EdgeId root) {
  const int m = g.edge_count();
  std::vector<EdgeId> parent(m, -1);
  std::vector<char> labeled(m, 0);
  std::queue<EdgeId> todo;
  todo.push(root);
  labeled[root] = 1;
  while (!todo.empty()) {
    const EdgeId x = todo.front();
    todo.pop();
    const Edge& ex = g.edge(x);
    for (int i = 0; i < k; ++i) {
      if (owner[x] == i) continue;
      auto cycle = forest_path(g, owner, i, ex.a, ex.b);
      if (!cycle) {
        // Shift every edge on the chain into the forest its child vacates.
        int target = i;
        for (EdgeId y = x;; y = parent[y]) {
          const int old = owner[y];
          owner[y] = target;
          if (y == root) break;
          target = old;
        }
        return true;
      }
      for (EdgeId y : *cycle) {
        if (labeled[y]) continue;
        labeled[y] = 1;
        parent[y] = x;
        todo.push(y);
      }
    }
  }
  return false;
}

}  // namespace

TreePacking tree_packing_number(const Multigraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  TreePacking out;
  if (n < 2 || !g.is_connected()) return out;
  std::vector<int> owner(m, -1);
  for (int k = 1; k * (n - 1) <= m; ++k) {
    int placed = 0;
    for (EdgeId e = 0; e < m; ++e) {
      if (owner[e] < 0) augment(g, owner, k, e);
    }
    for (EdgeId e = 0; e < m; ++e) placed += owner[e] >= 0;
    if (placed < k * (n - 1)) break;
    out.count = k;
    out.trees.assign(k, {});
    for (EdgeId e = 0; e < m; ++e) {
      if (owner[e] >= 0) out.trees[owner[e]].push_back(e);
    }
  }
  return out;
}

}  // namespace sz5
