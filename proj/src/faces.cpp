#include <algorithm>
#include <tuple>

#include "sz5/planar.hpp"

namespace sz5 {

namespace {

int dart_index(const Multigraph& g, Dart d) { return 2 * d.edge + (d.tail == g.edge(d.edge).b ? 1 : 0); }

Dart twin(const Multigraph& g, Dart d) { return {d.edge, g.edge(d.edge).other(d.tail)}; }

}  // namespace

int FaceSet::face_of(const Multigraph& g, Dart d) const { return dart_face.at(dart_index(g, d)); }

FaceSet trace_faces(const Multigraph& g, const RotationSystem& rot) {
  validate_rotation(g, rot);
  const int m = g.edge_count();
  // Position of each edge in the rotation at each of its ends.
  std::vector<int> pos(2 * m, -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t i = 0; i < rot.order[v].size(); ++i) {
      const EdgeId e = rot.order[v][i];
      pos[dart_index(g, {e, v})] = static_cast<int>(i);
    }
  }
  FaceSet fs;
  fs.dart_face.assign(2 * m, -1);
  for (int start = 0; start < 2 * m; ++start) {
    if (fs.dart_face[start] >= 0) continue;
    const int id = static_cast<int>(fs.faces.size());
    Face face;
    Dart d{start / 2, (start % 2) ? g.edge(start / 2).b : g.edge(start / 2).a};
    while (fs.dart_face[dart_index(g, d)] < 0) {
      fs.dart_face[dart_index(g, d)] = id;
      face.walk.push_back(d);
      face.vertices.push_back(d.tail);
      const Vertex h = g.edge(d.edge).other(d.tail);
      const auto& around = rot.order[h];
      const int p = pos[dart_index(g, {d.edge, h})];
      d = Dart{around[(p + 1) % around.size()], h};
    }
    if (dart_index(g, d) != dart_index(g, face.walk.front())) throw GraphError("rotation does not close into faces");
    std::sort(face.vertices.begin(), face.vertices.end());
    face.vertices.erase(std::unique(face.vertices.begin(), face.vertices.end()), face.vertices.end());
    fs.faces.push_back(std::move(face));
  }
  return fs;
}

bool euler_holds(const Multigraph& g, const FaceSet& faces) {
  const auto label = g.components();
  const int c = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  int isolated = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) isolated += g.degree(v) == 0;
  const int f = static_cast<int>(faces.faces.size()) + isolated;
  return g.vertex_count() - g.edge_count() + f == 2 * c;
}

std::vector<WeakAdjacency> weak_adjacency(const Multigraph& g, const FaceSet& faces) {
  std::vector<WeakAdjacency> out;
  const int m = g.edge_count();
  for (int f = 0; f < static_cast<int>(faces.faces.size()); ++f) {
    if (faces.faces[f].degree() < 3) continue;
    for (const Dart& d : faces.faces[f].walk) {
      WeakAdjacency w;
      w.from = f;
      Dart entering = twin(g, d);
      w.crossed.push_back(d.edge);
      int cur = faces.face_of(g, entering);
      bool closed = true;
      while (faces.faces[cur].degree() == 2) {
        if (static_cast<int>(w.crossed.size()) > m) {
          closed = false;  // a ring of 2-faces with no 3+-face
          break;
        }
        w.two_faces.push_back(cur);
        const auto& walk = faces.faces[cur].walk;
        const Dart other = walk[0] == entering ? walk[1] : walk[0];
        entering = twin(g, other);
        w.crossed.push_back(other.edge);
        cur = faces.face_of(g, entering);
      }
      if (!closed) continue;
      w.to = cur;
      w.t = static_cast<int>(w.crossed.size());
      // Each chain is found from both ends; keep the smaller starting dart.
      if (std::make_pair(f, dart_index(g, d)) < std::make_pair(cur, dart_index(g, entering))) {
        out.push_back(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const WeakAdjacency& x, const WeakAdjacency& y) {
    return std::tie(x.from, x.crossed.front(), x.to) < std::tie(y.from, y.crossed.front(), y.to);
  });
  return out;
}

std::optional<int> common_face(const FaceSet& faces, Vertex u, Vertex v) {
  for (std::size_t i = 0; i < faces.faces.size(); ++i) {
    const auto& vs = faces.faces[i].vertices;
    if (std::binary_search(vs.begin(), vs.end(), u) && std::binary_search(vs.begin(), vs.end(), v)) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

bool common_face_endpoints(const FaceSet& faces, Vertex u, Vertex v) { return common_face(faces, u, v).has_value(); }

}  // namespace sz5
