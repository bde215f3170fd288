#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sz5/multigraph.hpp"

namespace sz5 {

/// Disjoint cover of {0..n-1}, stored as a restricted-growth string: parts
/// are numbered in order of their smallest member.
class VertexPartition {
 public:
  VertexPartition() = default;

  /// Any labelling; equal labels share a part. Labels are renumbered.
  static VertexPartition from_labels(std::span<const int> labels);
  /// Explicit parts; must cover 0..n-1 exactly once.
  static VertexPartition from_parts(int vertex_count, std::span<const VertexSet> parts);
  /// Every vertex in its own part.
  static VertexPartition singletons(int vertex_count);
  /// One part holding every vertex.
  static VertexPartition whole(int vertex_count);

  int vertex_count() const { return static_cast<int>(rgs_.size()); }
  int part_count() const { return parts_; }
  const std::vector<int>& labels() const { return rgs_; }
  int part_of(Vertex v) const { return rgs_.at(v); }
  std::vector<VertexSet> parts() const;

  bool operator==(const VertexPartition&) const = default;
  auto operator<=>(const VertexPartition& o) const { return rgs_ <=> o.rgs_; }

 private:
  std::vector<int> rgs_;
  int parts_ = 0;
};

/// G/P: one vertex per part, intra-part edges dropped. vertex_map is the
/// part map.
ContractResult quotient(const Multigraph& g, const VertexPartition& p);

/// w_G(P) = sum of part degrees - 10t + 16. The single-part partition is
/// accepted (it appears as a refinement of a one-vertex part) and gives 16 - 10 = 6
/// for any graph.
int partition_weight(const Multigraph& g, const VertexPartition& p);

struct WeightResult {
  int weight = 0;
  VertexPartition argmin;
};

/// w(G): minimum over partitions with at least two parts, each inducing a
/// connected subgraph. Ties go to the lexicographically least labelling.
/// w(K1) = 6 (the one-part formula); the empty graph gives 16.
WeightResult graph_weight_serial(const Multigraph& g);
/// OpenMP version; splits the search by labelling prefix.
WeightResult graph_weight(const Multigraph& g, int jobs = 0);
/// Same minimum taken over every partition with t >= 2 (reference oracle).
WeightResult graph_weight_all_partitions(const Multigraph& g);

/// sigma(H) = 6 - w(H).
int co_weight(const Multigraph& h);

/// Expands a partition of G/H (H given by the vertex sets of its
/// components) back to a partition of G.
VertexPartition restored_partition(const Multigraph& g, std::span<const VertexSet> h_parts,
                                   const VertexPartition& p_quotient);

/// w_G(P) - sum_{i<l}(6 - w_{H_i}(Q_i)) - w_G(P_l), where H_i = G[V_i], Q_i
/// partitions H_i (labels local to the sorted vertex list of V_i) and P_l
/// replaces the first l parts by their refinements.
int refinement_residual(const Multigraph& g, const VertexPartition& p,
                        std::span<const VertexPartition> refinements, int l);

/// Calls `visit` with every restricted-growth string of length n, in
/// lexicographic order. Returning false from `visit` stops the walk.
void for_each_partition(int n, const std::function<bool(const std::vector<int>&, int)>& visit);

/// True when every part of `labels` induces a connected subgraph.
bool parts_connected(const Multigraph& g, std::span<const int> labels, int part_count);

struct TreePacking {
  int count = 0;
  std::vector<std::vector<EdgeId>> trees;
};

/// Maximum number of edge-disjoint spanning trees, with the trees, by
/// matroid-union augmentation. Disconnected graphs and graphs with fewer
/// than two vertices give 0.
TreePacking tree_packing_number(const Multigraph& g);

/// min over partitions with t >= 2 of floor(d(P) / (t - 1)): the
/// Nash-Williams-Tutte bound.
int tree_packing_partition_bound(const Multigraph& g);

}  // namespace sz5
