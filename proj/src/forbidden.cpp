#include <algorithm>

#include "sz5/reducer.hpp"

namespace sz5 {

namespace {

// (H,2)-paths a-x-b with x outside H, a < b.
std::vector<std::vector<Vertex>> h2_paths(const Multigraph& g, const VertexSet& h) {
  const int n = g.vertex_count();
  const auto mult = g.multiplicity_matrix();
  std::vector<char> in(n, 0);
  for (Vertex v : h) in[v] = 1;
  std::vector<std::vector<Vertex>> out;
  for (Vertex x = 0; x < n; ++x) {
    if (in[x]) continue;
    for (Vertex a : h) {
      for (Vertex b : h) {
        if (a < b && mult[a * n + x] > 0 && mult[x * n + b] > 0) out.push_back({a, x, b});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// (H,3)-paths a-x-y-b with x, y outside H, a != b.
std::vector<std::vector<Vertex>> h3_paths(const Multigraph& g, const VertexSet& h) {
  const int n = g.vertex_count();
  const auto mult = g.multiplicity_matrix();
  std::vector<char> in(n, 0);
  for (Vertex v : h) in[v] = 1;
  std::vector<std::vector<Vertex>> out;
  for (Vertex a : h) {
    for (Vertex x = 0; x < n; ++x) {
      if (in[x] || mult[a * n + x] == 0) continue;
      for (Vertex y = 0; y < n; ++y) {
        if (in[y] || y == x || mult[x * n + y] == 0) continue;
        for (Vertex b : h) {
          if (b != a && mult[y * n + b] > 0) out.push_back({a, x, y, b});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool internally_disjoint(const std::vector<Vertex>& p, const std::vector<Vertex>& q) {
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    for (std::size_t j = 1; j + 1 < q.size(); ++j) {
      if (p[i] == q[j]) return false;
    }
  }
  return true;
}

bool share_end(const std::vector<Vertex>& p, const std::vector<Vertex>& q) {
  return p.front() == q.front() || p.front() == q.back() || p.back() == q.front() || p.back() == q.back();
}

VertexSet sorted_copy(VertexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

ForbiddenReport forbidden_scan(const Multigraph& g) {
  ForbiddenReport rep;
  if (g.vertex_count() < 3) return rep;
  const Multigraph t113 = make_named(NamedPattern::t(1, 1, 3));
  const Multigraph t222 = make_named(NamedPattern::t(2, 2, 2));
  for (auto& img : find_pattern(g, t113, PatternMode::kSubgraph)) rep.t113.push_back({img, {}});

  for (auto& img : find_pattern(g, t222, PatternMode::kInduced)) {
    const auto paths = h2_paths(g, sorted_copy(img));
    bool done = false;
    for (std::size_t i = 0; i < paths.size() && !done; ++i) {
      for (std::size_t j = i + 1; j < paths.size() && !done; ++j) {
        if (paths[i][1] != paths[j][1] && share_end(paths[i], paths[j])) {
          rep.t222_two_paths.push_back({img, {paths[i], paths[j]}});
          done = true;
        }
      }
    }
  }
  if (g.vertex_count() < 5) return rep;

  const Multigraph q2333 = make_named(NamedPattern::q(2, 3, 3, 3));
  for (auto& img : find_pattern(g, q2333, PatternMode::kInduced)) {
    const VertexSet h = sorted_copy(img);
    auto p2 = h2_paths(g, h);
    if (!p2.empty()) {
      rep.q2333_short_path.push_back({img, {p2.front()}});
      continue;
    }
    auto p3 = h3_paths(g, h);
    if (!p3.empty()) rep.q2333_short_path.push_back({img, {p3.front()}});
  }

  std::vector<std::vector<Vertex>> q22_images;
  for (const auto& q : {make_named(NamedPattern::q(2, 2, 3, 3)), make_named(NamedPattern::q(2, 3, 2, 3))}) {
    for (auto& img : find_pattern(g, q, PatternMode::kInduced)) q22_images.push_back(img);
  }
  for (const auto& img : q22_images) {
    const VertexSet h = sorted_copy(img);
    const auto p2 = h2_paths(g, h);
    auto others = p2;
    const auto p3 = h3_paths(g, h);
    others.insert(others.end(), p3.begin(), p3.end());
    bool done = false;
    for (const auto& p : p2) {
      for (const auto& q : others) {
        if (p != q && internally_disjoint(p, q)) {
          rep.q2233_paths.push_back({img, {p, q}});
          done = true;
          break;
        }
      }
      if (done) break;
    }
  }

  // Q2223 labelled as v1..v4 with mu(v4, v1) = 3: pattern vertices 0..3 of
  // Q(2,2,2,3) are v1..v4.
  const Multigraph q2223 = make_named(NamedPattern::q(2, 2, 2, 3));
  const int n = g.vertex_count();
  const auto mult = g.multiplicity_matrix();
  std::vector<VertexSet> seen;
  for (const auto& img : find_pattern(g, q2223, PatternMode::kSubgraph, PatternDedup::kNone)) {
    const VertexSet key = sorted_copy(img);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    std::vector<char> in(n, 0);
    for (Vertex v : img) in[v] = 1;
    const Vertex v1 = img[0], v2 = img[1], v3 = img[2], v4 = img[3];
    bool hit = false;
    for (Vertex x = 0; x < n && !hit; ++x) {
      if (in[x] || !mult[v1 * n + x] || !mult[x * n + v2]) continue;
      for (Vertex y = 0; y < n && !hit; ++y) {
        if (in[y] || y == x || mult[v2 * n + y] != 2 || mult[y * n + v3] != 2) continue;
        for (Vertex z = 0; z < n && !hit; ++z) {
          if (in[z] || z == x || z == y || !mult[v3 * n + z] || !mult[z * n + v4]) continue;
          rep.q2223_triple.push_back({img, {{v1, x, v2}, {v2, y, v3}, {v3, z, v4}}});
          hit = true;
        }
      }
    }
    if (hit) seen.push_back(key);
  }
  return rep;
}

}  // namespace sz5
