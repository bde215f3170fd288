#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sz5/catalog.hpp"
#include "sz5/orientation.hpp"
#include "sz5/planar.hpp"

namespace sz5 {

/// Shared work counter. A limit <= 0 means unlimited.
class WorkBudget {
 public:
  explicit WorkBudget(std::int64_t limit = 0) : limit_(limit) {}
  /// Charges one unit; false once the limit is reached.
  bool spend() {
    if (limit_ > 0 && used_ >= limit_) return false;
    ++used_;
    return true;
  }
  bool exhausted() const { return limit_ > 0 && used_ >= limit_; }
  std::int64_t used() const { return used_; }

 private:
  std::int64_t limit_;
  std::int64_t used_ = 0;
};

struct SubgraphSearch {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<VertexSet> vertices;
  std::int64_t tested = 0;
};

/// Smallest proper vertex set S (|S| >= 2, increasing size, lexicographic
/// within a size) inducing a connected S5-contractible subgraph. With
/// `require_quotient` the contraction G/S must be S5-contractible as well.
SubgraphSearch find_contractible_subgraph(const Multigraph& g, WorkBudget& budget,
                                          bool require_quotient = false);
SubgraphSearch find_contractible_subgraph(const Multigraph& g, std::int64_t budget = 0);

struct LiftStep {
  LiftPath path;             ///< edge ids refer to the graph before any lift of the plan
  RotationSystem rotation;   ///< embedding in which the endpoints share a face
  int face = 0;              ///< that face
};

struct LiftPlan {
  std::vector<LiftStep> lifts;
  VertexSet h;               ///< contractible set in the lifted graph
};

struct LiftPlanOptions {
  int max_lifts = 3;
  int max_path_length = 3;
  /// Also require the lifted graph modulo H to be S5-contractible. This is
  /// what the recursion needs; turning it off accepts plans whose quotient
  /// is disconnected (e.g. an isolated internal vertex).
  bool require_quotient_contractible = true;
};

struct LiftPlanSearch {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<LiftPlan> plan;
  std::int64_t plans_tested = 0;
  /// True when the search ended without a plan and the path caps may be the reason.
  bool cap_binding = false;
};

/// Plans of up to max_lifts edge-disjoint paths of length 2..max_path_length,
/// in increasing total length, then lexicographic on vertex sequences. Each
/// path's endpoints must share a face of the current embedding; the graph is
/// re-embedded after every lift.
LiftPlanSearch find_lift_plan(const Multigraph& g, const RotationSystem& rot, WorkBudget& budget,
                              const LiftPlanOptions& options = {});
LiftPlanSearch find_lift_plan(const Multigraph& g, const RotationSystem& rot, std::int64_t budget = 0,
                              const LiftPlanOptions& options = {});

/// Checks one explicit plan given as vertex sequences (edges chosen as the
/// lowest unused ids). Returns the completed plan when every lift is legal and
/// H meets the plan criteria.
std::optional<LiftPlan> evaluate_lift_plan(const Multigraph& g, const RotationSystem& rot,
                                           const std::vector<std::vector<Vertex>>& paths, const VertexSet& h,
                                           const LiftPlanOptions& options = {});

/// Labelled digest (vertex count and edge list in id order).
std::string graph_digest(const Multigraph& g);

struct ReductionTrace {
  enum class Kind { kBase, kContract, kLiftContract };
  Kind kind = Kind::kBase;
  Multigraph graph;
  std::string digest;
  RotationSystem rotation;
  std::vector<LiftStep> lifts;      ///< kLiftContract only
  Multigraph lifted;                ///< kLiftContract only
  VertexSet h;                      ///< contracted set (in `lifted` for kLiftContract)
  /// [0] = trace of the subgraph induced by h, [1] = trace of the quotient.
  std::vector<ReductionTrace> children;

  int depth() const;
  std::size_t node_count() const;
};

struct ReduceResult {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<ReductionTrace> trace;
  std::string message;
  std::int64_t work = 0;
};

/// Recursion: v <= 4 is a leaf; otherwise contract a contractible proper
/// subgraph (case 2) or lift paths first (case 3). Input must be planar,
/// connected and S5-contractible.
ReduceResult reduce(const Multigraph& g, const RotationSystem& rot, std::int64_t budget = 0);

/// Recomputes every intermediate graph and premise; true when all digests match.
bool replay(const Multigraph& g, const ReductionTrace& trace, std::string* why = nullptr);

/// beta-orientation assembled from a trace.
ExtendResult solve_with_trace(const ReductionTrace& trace, const Boundary& beta, std::int64_t budget = 0);
/// reduce + solve_with_trace. status kNotFound with a message if reduction fails.
ExtendResult solve_beta(const Multigraph& g, const RotationSystem& rot, const Boundary& beta,
                        std::int64_t budget = 0);

struct ForbiddenFinding {
  VertexSet h;                               ///< image of the pattern, in pattern vertex order
  std::vector<std::vector<Vertex>> paths;    ///< supporting H-paths
};

struct ForbiddenReport {
  std::vector<ForbiddenFinding> t113;
  std::vector<ForbiddenFinding> t222_two_paths;
  std::vector<ForbiddenFinding> q2333_short_path;
  std::vector<ForbiddenFinding> q2233_paths;
  std::vector<ForbiddenFinding> q2223_triple;

  bool empty() const {
    return t113.empty() && t222_two_paths.empty() && q2333_short_path.empty() && q2233_paths.empty() &&
           q2223_triple.empty();
  }
};

ForbiddenReport forbidden_scan(const Multigraph& g);

}  // namespace sz5
