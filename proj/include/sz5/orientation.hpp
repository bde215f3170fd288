#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sz5/multigraph.hpp"

namespace sz5 {

/// Z_k-boundary: residues per vertex summing to 0 mod k, k odd and >= 3.
class Boundary {
 public:
  Boundary() = default;
  /// Values are reduced mod k. Throws on even or small k and on a nonzero sum.
  Boundary(int k, std::vector<int> values);
  static Boundary zero(int k, int vertex_count);
  /// The index-th boundary of the odometer over vertices 0..n-2 (vertex 0
  /// most significant); the last value is forced by the zero-sum rule.
  static Boundary from_index(int k, int vertex_count, std::int64_t index);
  static std::int64_t count(int k, int vertex_count);

  int modulus() const { return k_; }
  int vertex_count() const { return static_cast<int>(values_.size()); }
  int operator[](Vertex v) const { return values_.at(v); }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const Boundary&) const = default;

 private:
  int k_ = 3;
  std::vector<int> values_;
};

inline int mod(std::int64_t x, int k) { return static_cast<int>(((x % k) + k) % k); }

/// tail[e] is the tail of edge e; the head is the other endpoint.
struct Orientation {
  std::vector<Vertex> tail;

  bool operator==(const Orientation&) const = default;
};

/// Every edge directed from endpoint_a to endpoint_b, as stored in the graph.
Orientation orientation_as_stored(const Multigraph& g);
/// d+(v) - d-(v) per vertex. Throws if D does not cover G's edges.
std::vector<int> imbalance(const Multigraph& g, const Orientation& d);
bool verify_beta_orientation(const Multigraph& g, const Orientation& d, const Boundary& beta);

enum class SearchStatus { kFound, kNotFound, kBudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<Orientation> orientation;
  std::int64_t nodes = 0;
};

/// Backtracking over edges (decreasing endpoint-degree sum, then id) with
/// modular reachability pruning at both endpoints. Parallel edges are
/// assigned forward (low -> high endpoint) before backward, which loses no
/// solutions. budget <= 0 means unlimited search nodes.
SearchResult find_beta_orientation(const Multigraph& g, const Boundary& beta, std::int64_t budget = 0);

/// beta == 0.
SearchResult mod_orientation(const Multigraph& g, int k, std::int64_t budget = 0);

struct SzkResult {
  bool holds = false;
  bool budget_exhausted = false;
  std::optional<Boundary> witness;   ///< least boundary with no orientation
  std::int64_t boundaries_checked = 0;
  std::int64_t nodes = 0;
};

/// Tests every boundary in odometer order. A boundary that runs out of budget
/// leaves the verdict open unless some other boundary is refuted.
SzkResult is_strongly_zk_serial(const Multigraph& g, int k, std::int64_t budget = 0);
/// OpenMP kernel over boundary indices; same verdict and witness as serial.
SzkResult is_strongly_zk(const Multigraph& g, int k, std::int64_t budget = 0, int jobs = 0);
/// Enumerates all 2^m orientations once (Gray code) and reads off the
/// achievable boundaries. m <= 26.
SzkResult is_strongly_zk_exhaustive(const Multigraph& g, int k);

/// Modular flow certificate. `values` are residues relative to `orientation`.
struct ModularFlowCert {
  enum class Kind { kCircular, kAntisymmetric };
  Kind kind = Kind::kCircular;
  int modulus = 5;
  int p = 5, q = 2;  ///< circular window [q, p - q]; unused for antisymmetric
  Orientation orientation;
  std::vector<int> values;
};

/// Conservation mod k at every vertex, plus the kind-specific value rules.
bool verify_flow_cert(const Multigraph& g, const ModularFlowCert& cert);

struct CertResult {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<ModularFlowCert> cert;
  std::int64_t nodes = 0;
};

/// Modulo (2t+1)-orientation with the constant value t on every arc.
CertResult circular_flow_cert(const Multigraph& g, int t, std::int64_t budget = 0);

/// Z5 antisymmetric flow relative to D with values in {1,2}: solve a
/// beta-orientation D' for beta = 2 * imbalance_D mod 5, then value 2 where D'
/// agrees with D and 1 where it disagrees.
CertResult asf_cert(const Multigraph& g, const Orientation& d, std::int64_t budget = 0);

/// Solver for the pieces inside contracted sets.
using InternalSolver = std::function<SearchResult(const Multigraph&, const Boundary&)>;

struct ExtendResult {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<Orientation> orientation;
  std::int64_t nodes = 0;
};

/// Lifts a beta_q-orientation of G/H back to G. External edges copy D_q; each
/// contracted set S is solved for beta'(v) = beta(v) - (external imbalance at v).
/// Without a solver, find_beta_orientation with `budget` is used.
ExtendResult extend_through_contraction(const Multigraph& g, std::span<const VertexSet> h_sets,
                                        const Orientation& d_quotient, const Boundary& beta,
                                        std::int64_t budget = 0, const InternalSolver& solver = {});

/// Replays each lifted edge's direction along its path. D' orients the graph
/// produced by lift_paths(g, lifts). Throws if the result fails to verify.
Orientation extend_through_lifting(const Multigraph& g, std::span<const LiftPath> lifts,
                                   const Orientation& d_lifted, const Boundary& beta);

}  // namespace sz5
