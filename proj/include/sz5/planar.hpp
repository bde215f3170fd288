#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sz5/multigraph.hpp"

namespace sz5 {

/// Cyclic order of incident edge ids around each vertex. Since the graph is
/// loopless, an edge id at vertex v names the end of that edge at v.
struct RotationSystem {
  std::vector<std::vector<EdgeId>> order;

  bool operator==(const RotationSystem&) const = default;
};

/// Throws GraphError unless every edge appears exactly once at each endpoint
/// and nowhere else.
void validate_rotation(const Multigraph& g, const RotationSystem& rot);

/// "v: e_i e_j ..." lines, one per vertex.
std::string rotation_to_text(const RotationSystem& rot);
/// Parses the lines produced by rotation_to_text and validates against g.
RotationSystem rotation_from_text(const std::string& text, const Multigraph& g);

struct EmbedResult {
  std::optional<RotationSystem> rotation;
  /// On failure: edges (as vertex pairs of the simple skeleton) of a
  /// subdivided K5 or K3,3.
  std::vector<std::pair<Vertex, Vertex>> kuratowski;
};

/// Planar embedding of a connected multigraph. Parallel edges sit next to
/// each other: ascending ids at the lower endpoint, descending at the other,
/// so consecutive copies bound 2-faces. Deterministic.
EmbedResult embed(const Multigraph& g);

/// A dart is an edge traversed from `tail`.
struct Dart {
  EdgeId edge = 0;
  Vertex tail = 0;

  bool operator==(const Dart&) const = default;
};

struct Face {
  std::vector<Dart> walk;    ///< boundary walk
  VertexSet vertices;        ///< V(f), sorted
  int degree() const { return static_cast<int>(walk.size()); }
};

struct FaceSet {
  std::vector<Face> faces;
  /// Face on the left of each dart, indexed 2*e + (tail == endpoint_b).
  std::vector<int> dart_face;

  int face_of(const Multigraph& g, Dart d) const;
};

/// Traces boundary walks: after arriving at v along e, continue with the
/// successor of e in v's rotation.
FaceSet trace_faces(const Multigraph& g, const RotationSystem& rot);

/// v - e + f == 1 + (number of components).
bool euler_holds(const Multigraph& g, const FaceSet& faces);

/// Two 3+-faces joined across edges through t - 1 intermediate 2-faces.
struct WeakAdjacency {
  int from = 0;
  int to = 0;
  int t = 1;
  std::vector<int> two_faces;       ///< intermediate 2-faces in order
  std::vector<EdgeId> crossed;      ///< the t edges crossed, from `from` to `to`
};

/// Every chain, reported once, ordered by (from, first crossed edge).
std::vector<WeakAdjacency> weak_adjacency(const Multigraph& g, const FaceSet& faces);

/// True when some face has both u and v on its boundary.
bool common_face_endpoints(const FaceSet& faces, Vertex u, Vertex v);
/// Index of the first such face.
std::optional<int> common_face(const FaceSet& faces, Vertex u, Vertex v);

}  // namespace sz5
