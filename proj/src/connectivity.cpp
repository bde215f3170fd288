#include <bit>
#include <algorithm>
#include <limits>

#include "sz5/multigraph.hpp"

namespace sz5 {

namespace {

EdgeCutWitness disconnected_witness(const Multigraph& g) {
  const auto label = g.components();
  EdgeCutWitness w;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (label[v] == 0) w.side.push_back(v);
  }
  w.size = 0;
  return w;
}

}  // namespace

EdgeCutWitness global_min_cut(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) return {};
  if (!g.is_connected()) return disconnected_witness(g);

  // Stoer-Wagner on the dense weight matrix; members[i] tracks which original
  // vertices have been merged into super-vertex i.
  std::vector<int> w = g.multiplicity_matrix();
  std::vector<VertexSet> members(n);
  for (Vertex v = 0; v < n; ++v) members[v] = {v};
  std::vector<int> alive(n);
  for (int i = 0; i < n; ++i) alive[i] = i;

  EdgeCutWitness best;
  best.size = std::numeric_limits<int>::max();
  while (alive.size() > 1) {
    const int k = static_cast<int>(alive.size());
    std::vector<int> key(k, 0);
    std::vector<char> added(k, 0);
    int prev = -1;
    int last = -1;
    for (int step = 0; step < k; ++step) {
      int sel = -1;
      for (int i = 0; i < k; ++i) {
        if (!added[i] && (sel < 0 || key[i] > key[sel])) sel = i;
      }
      added[sel] = 1;
      prev = last;
      last = sel;
      for (int i = 0; i < k; ++i) {
        if (!added[i]) key[i] += w[alive[sel] * n + alive[i]];
      }
    }
    const int cut_of_phase = key[last];
    if (cut_of_phase < best.size) {
      best.size = cut_of_phase;
      best.side = members[alive[last]];
    }
    // Merge last into prev.
    const int s = alive[prev];
    const int t = alive[last];
    for (int i = 0; i < n; ++i) {
      w[s * n + i] += w[t * n + i];
      w[i * n + s] = w[s * n + i];
    }
    w[s * n + s] = 0;
    members[s].insert(members[s].end(), members[t].begin(), members[t].end());
    alive.erase(alive.begin() + last);
  }
  std::sort(best.side.begin(), best.side.end());
  return best;
}

EdgeCutWitness global_min_cut_exhaustive(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) return {};
  if (n > 30) throw GraphError("exhaustive cut enumeration limited to 30 vertices");
  EdgeCutWitness best;
  best.size = std::numeric_limits<int>::max();
  std::uint32_t best_mask = 0;
  // Masks over vertices 1..n-1; vertex 0 is always on the reported side.
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t rest = 0; rest + 1 < limit; ++rest) {
    const std::uint32_t mask = (rest << 1) | 1u;
    int size = 0;
    for (const Edge& e : g.edges()) size += ((mask >> e.a) & 1u) != ((mask >> e.b) & 1u);
    if (size < best.size) {
      best.size = size;
      best_mask = mask;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if ((best_mask >> v) & 1u) best.side.push_back(v);
  }
  return best;
}

std::optional<EdgeCutWitness> essential_edge_connectivity(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 4) return std::nullopt;
  if (n > 30) throw GraphError("essential cut enumeration limited to 30 vertices");
  std::optional<EdgeCutWitness> best;
  std::uint32_t best_mask = 0;
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t rest = 0; rest + 1 < limit; ++rest) {
    const std::uint32_t mask = (rest << 1) | 1u;
    const int inside = std::popcount(mask);
    if (inside < 2 || n - inside < 2) continue;
    int size = 0;
    for (const Edge& e : g.edges()) size += ((mask >> e.a) & 1u) != ((mask >> e.b) & 1u);
    if (!best || size < best->size) {
      best = EdgeCutWitness{{}, size};
      best_mask = mask;
    }
  }
  if (best) {
    for (Vertex v = 0; v < n; ++v) {
      if ((best_mask >> v) & 1u) best->side.push_back(v);
    }
  }
  return best;
}

}  // namespace sz5
