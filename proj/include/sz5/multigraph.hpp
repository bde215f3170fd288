#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sz5 {

using Vertex = int;
using EdgeId = int;
using VertexSet = std::vector<Vertex>;

/// Sentinel used in edge maps for edges that did not survive an edit.
inline constexpr EdgeId kRemovedEdge = -1;

struct Edge {
  EdgeId id = 0;
  Vertex a = 0;
  Vertex b = 0;

  Vertex other(Vertex v) const { return v == a ? b : a; }
  bool operator==(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Loopless undirected multigraph. Parallel edges are distinct objects with
/// dense ids 0..m-1 in insertion order, so orientations and flows can be
/// stated per edge.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);
  Multigraph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

  /// Builds a graph from an upper-triangular multiplicity vector over the pairs
  /// (0,1),(0,2),..,(0,n-1),(1,2),.. in that order.
  static Multigraph from_multiplicities(int vertex_count, std::span<const int> upper);

  EdgeId add_edge(Vertex a, Vertex b);

  int vertex_count() const { return static_cast<int>(incident_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;
  const std::vector<EdgeId>& incident(Vertex v) const;

  int degree(Vertex v) const;
  int multiplicity(Vertex u, Vertex v) const;
  int max_multiplicity() const;
  int min_degree() const;
  std::vector<int> degrees() const;

  /// Multiplicities over vertex pairs in upper-triangular order.
  std::vector<int> multiplicity_vector() const;
  /// Dense n*n multiplicity matrix, row-major.
  std::vector<int> multiplicity_matrix() const;

  /// d(X): edges with exactly one end in `side`.
  int cut_size(std::span<const Vertex> side) const;
  bool is_connected() const;
  /// Component label per vertex, labels numbered by smallest member.
  std::vector<int> components() const;

  bool operator==(const Multigraph& other) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

inline int pair_count(int n) { return n * (n - 1) / 2; }
/// Index of pair (u,v), u != v, in the upper-triangular order.
int pair_index(int n, Vertex u, Vertex v);

struct ContractResult {
  Multigraph graph;
  std::vector<Vertex> vertex_map;  ///< old vertex -> new vertex
  std::vector<EdgeId> edge_map;    ///< old edge -> new edge or kRemovedEdge
};

/// Identifies vertices with equal labels. Classes are numbered by their
/// smallest member, surviving edges keep their relative order.
ContractResult quotient_by_labels(const Multigraph& g, std::span<const int> labels);

/// Merges `s` into a single vertex and deletes the edges inside `s`.
ContractResult contract(const Multigraph& g, std::span<const Vertex> s);

/// Contracts each listed vertex set to its own vertex.
ContractResult contract_sets(const Multigraph& g, std::span<const VertexSet> sets);

struct SubgraphResult {
  Multigraph graph;
  std::vector<Vertex> vertices;  ///< new vertex -> old vertex
  std::vector<EdgeId> edge_map;  ///< new edge -> old edge
};

SubgraphResult induced_subgraph(const Multigraph& g, std::span<const Vertex> s);

/// A path v0..vn together with the edge used for each step.
struct LiftPath {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  bool operator==(const LiftPath&) const = default;
};

struct LiftResult {
  Multigraph graph;
  std::vector<EdgeId> edge_map;  ///< old edge -> new edge or kRemovedEdge
  std::vector<EdgeId> new_edges; ///< one per lifted path, in order
};

/// Deletes the path edges and adds v0-vn. Several edge-disjoint paths may be
/// lifted at once; surviving edges are renumbered densely and the new edges
/// are appended in path order.
LiftResult lift_paths(const Multigraph& g, std::span<const LiftPath> paths);
LiftResult lift_path(const Multigraph& g, const LiftPath& path);

// Connectivity

struct EdgeCutWitness {
  VertexSet side;
  int size = 0;
};

/// Minimum d(X) over nonempty proper X, via Stoer-Wagner on the weighted
/// simple skeleton. Disconnected input yields size 0 with a component as
/// the side; graphs with fewer than two vertices yield an empty side.
EdgeCutWitness global_min_cut(const Multigraph& g);
/// Same quantity by enumerating all 2^(n-1) bipartitions. Side contains vertex 0.
EdgeCutWitness global_min_cut_exhaustive(const Multigraph& g);
/// Minimum cut with both sides of size >= 2, or nullopt when none exists.
std::optional<EdgeCutWitness> essential_edge_connectivity(const Multigraph& g);

// Isomorphism and patterns

/// Lexicographically least multiplicity-preserving bijection g -> h.
std::optional<std::vector<Vertex>> isomorphic(const Multigraph& g, const Multigraph& h);

enum class PatternMode { kSubgraph, kInduced };
enum class PatternDedup { kByImage, kNone };

/// Injections of `pattern` vertices into `g` (image[i] = target of pattern
/// vertex i). Subgraph mode requires mu_P <= mu_G on every pair, induced mode
/// equality. kByImage keeps the lexicographically least injection per image
/// vertex set.
std::vector<std::vector<Vertex>> find_pattern(const Multigraph& g, const Multigraph& pattern,
                                              PatternMode mode,
                                              PatternDedup dedup = PatternDedup::kByImage);

/// Lexicographically least upper-triangular multiplicity vector over all
/// vertex permutations. Exhaustive, intended for n <= 8.
std::vector<int> canonical_form(const Multigraph& g);
/// 64-bit FNV-1a digest of (n, canonical form) as 16 hex digits. For graphs
/// too large for exhaustive canonization the digest is taken over the labelled
/// multiplicities and prefixed with "L".
std::string canonical_hash(const Multigraph& g);

struct EnumerationBounds {
  int vertex_count = 0;
  int min_edges = 0;
  std::optional<int> max_edges;
  std::optional<int> mu_max;
  int delta_min = 0;
  bool connected = false;
};

/// One canonical representative per isomorphism class within the bounds,
/// sorted by canonical vector. Serial reference implementation.
std::vector<Multigraph> enumerate_class_serial(const EnumerationBounds& bounds);
/// OpenMP kernel producing the same list as enumerate_class_serial.
std::vector<Multigraph> enumerate_class(const EnumerationBounds& bounds, int jobs = 0);

}  // namespace sz5
