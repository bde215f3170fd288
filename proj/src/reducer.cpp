#include "sz5/reducer.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>

namespace sz5 {

namespace {

// Lexicographic walk over s-subsets of {0..n-1}; `visit` returns false to stop.
bool for_each_subset(int n, int s, const std::function<bool(const VertexSet&)>& visit) {
  if (s > n || s < 0) return true;
  VertexSet c(s);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    if (!visit(c)) return false;
    int i = s - 1;
    while (i >= 0 && c[i] == n - s + i) --i;
    if (i < 0) return true;
    ++c[i];
    for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
  }
}

bool contractible(const Multigraph& g) {
  if (g.vertex_count() < 2 || !g.is_connected()) return false;
  return is_s5_contractible(g).contractible;
}

bool induces_connected(const Multigraph& g, const VertexSet& s) {
  return induced_subgraph(g, s).graph.is_connected();
}

// Lowest-id edge between u and v not yet in `used`.
std::optional<EdgeId> free_edge(const Multigraph& g, Vertex u, Vertex v, const std::vector<char>& used) {
  std::optional<EdgeId> best;
  for (EdgeId e : g.incident(u)) {
    if (used[e] || g.edge(e).other(u) != v) continue;
    if (!best || e < *best) best = e;
  }
  return best;
}

std::optional<std::vector<LiftPath>> assign_edges(const Multigraph& g, const std::vector<std::vector<Vertex>>& paths) {
  std::vector<char> used(g.edge_count(), 0);
  std::vector<LiftPath> out;
  for (const auto& vs : paths) {
    LiftPath p;
    p.vertices = vs;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      const auto e = free_edge(g, vs[i], vs[i + 1], used);
      if (!e) return std::nullopt;
      used[*e] = 1;
      p.edges.push_back(*e);
    }
    out.push_back(std::move(p));
  }
  return out;
}

// Applies lifts one by one, checking that each path's endpoints share a face
// of the current embedding.
std::optional<std::vector<LiftStep>> legal_steps(const Multigraph& g, const RotationSystem& rot,
                                                 const std::vector<LiftPath>& paths) {
  std::vector<LiftStep> steps;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    RotationSystem cur = rot;
    Multigraph gi = g;
    if (i > 0) {
      gi = lift_paths(g, std::span<const LiftPath>(paths.data(), i)).graph;
      if (!gi.is_connected()) return std::nullopt;
      const EmbedResult er = embed(gi);
      if (!er.rotation) return std::nullopt;
      cur = *er.rotation;
    }
    const FaceSet fs = trace_faces(gi, cur);
    const auto face = common_face(fs, paths[i].vertices.front(), paths[i].vertices.back());
    if (!face) return std::nullopt;
    steps.push_back({paths[i], std::move(cur), *face});
  }
  return steps;
}

bool h_acceptable(const Multigraph& lifted, const VertexSet& h, bool require_quotient) {
  if (h.size() < 2 || static_cast<int>(h.size()) >= lifted.vertex_count()) return false;
  const Multigraph sub = induced_subgraph(lifted, h).graph;
  if (!contractible(sub)) return false;
  return !require_quotient || contractible(contract(lifted, h).graph);
}

// Simple vertex paths with 2..max_len edges, first vertex below last, sorted by
// (length, sequence).
std::vector<std::vector<Vertex>> candidate_paths(const Multigraph& g, int max_len) {
  const int n = g.vertex_count();
  const auto mult = g.multiplicity_matrix();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  std::vector<char> on(n, 0);
  std::function<void(int)> grow = [&](int len) {
    if (len >= 2 && cur.front() < cur.back()) out.push_back(cur);
    if (len == max_len) return;
    const Vertex last = cur.back();
    for (Vertex w = 0; w < n; ++w) {
      if (on[w] || mult[last * n + w] == 0) continue;
      cur.push_back(w);
      on[w] = 1;
      grow(len + 1);
      on[w] = 0;
      cur.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    cur = {s};
    on[s] = 1;
    grow(0);
    on[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

}  // namespace

std::string graph_digest(const Multigraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.a));
    mix(static_cast<std::uint64_t>(e.b));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SubgraphSearch find_contractible_subgraph(const Multigraph& g, WorkBudget& budget, bool require_quotient) {
  SubgraphSearch out;
  const int n = g.vertex_count();
  for (int s = 2; s < n; ++s) {
    const bool finished = for_each_subset(n, s, [&](const VertexSet& set) {
      if (!induces_connected(g, set)) return true;
      if (!budget.spend()) {
        out.status = SearchStatus::kBudgetExhausted;
        return false;
      }
      ++out.tested;
      if (!contractible(induced_subgraph(g, set).graph)) return true;
      if (require_quotient && !contractible(contract(g, set).graph)) return true;
      out.status = SearchStatus::kFound;
      out.vertices = set;
      return false;
    });
    if (!finished) return out;
  }
  out.status = SearchStatus::kNotFound;
  return out;
}

SubgraphSearch find_contractible_subgraph(const Multigraph& g, std::int64_t budget) {
  WorkBudget b(budget);
  return find_contractible_subgraph(g, b, false);
}

std::optional<LiftPlan> evaluate_lift_plan(const Multigraph& g, const RotationSystem& rot,
                                           const std::vector<std::vector<Vertex>>& paths, const VertexSet& h,
                                           const LiftPlanOptions& options) {
  const auto lps = assign_edges(g, paths);
  if (!lps) return std::nullopt;
  for (const LiftPath& p : *lps) {
    if (p.vertices.front() == p.vertices.back()) return std::nullopt;
  }
  auto steps = legal_steps(g, rot, *lps);
  if (!steps) return std::nullopt;
  const Multigraph lifted = lift_paths(g, *lps).graph;
  VertexSet sorted = h;
  std::sort(sorted.begin(), sorted.end());
  if (!induces_connected(lifted, sorted)) return std::nullopt;
  if (!h_acceptable(lifted, sorted, options.require_quotient_contractible)) return std::nullopt;
  return LiftPlan{std::move(*steps), sorted};
}

LiftPlanSearch find_lift_plan(const Multigraph& g, const RotationSystem& rot, WorkBudget& budget,
                              const LiftPlanOptions& options) {
  LiftPlanSearch out;
  const int n = g.vertex_count();
  const auto cands = candidate_paths(g, options.max_path_length);
  const int c = static_cast<int>(cands.size());
  // Index tuples i1 <= i2 <= ... for 1..max_lifts lifts.
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  std::function<void(int)> pick = [&](int from) {
    if (!cur.empty()) tuples.push_back(cur);
    if (static_cast<int>(cur.size()) == options.max_lifts) return;
    for (int i = from; i < c; ++i) {
      cur.push_back(i);
      pick(i);
      cur.pop_back();
    }
  };
  pick(0);
  auto total = [&](const std::vector<int>& t) {
    std::size_t s = 0;
    for (int i : t) s += cands[i].size() - 1;
    return s;
  };
  std::stable_sort(tuples.begin(), tuples.end(), [&](const auto& x, const auto& y) {
    const auto tx = total(x), ty = total(y);
    return tx != ty ? tx < ty : x < y;
  });

  for (const auto& t : tuples) {
    if (!budget.spend()) {
      out.status = SearchStatus::kBudgetExhausted;
      return out;
    }
    ++out.plans_tested;
    std::vector<std::vector<Vertex>> paths;
    for (int i : t) paths.push_back(cands[i]);
    const auto lps = assign_edges(g, paths);
    if (!lps) continue;
    auto steps = legal_steps(g, rot, *lps);
    if (!steps) continue;
    const Multigraph lifted = lift_paths(g, *lps).graph;
    std::optional<VertexSet> found;
    bool exhausted = false;
    for (int s = 2; s < n && !found && !exhausted; ++s) {
      for_each_subset(n, s, [&](const VertexSet& set) {
        if (!induces_connected(lifted, set)) return true;
        if (!budget.spend()) {
          exhausted = true;
          return false;
        }
        if (!h_acceptable(lifted, set, options.require_quotient_contractible)) return true;
        found = set;
        return false;
      });
    }
    if (exhausted) {
      out.status = SearchStatus::kBudgetExhausted;
      return out;
    }
    if (found) {
      out.status = SearchStatus::kFound;
      out.plan = LiftPlan{std::move(*steps), *found};
      return out;
    }
  }
  out.status = SearchStatus::kNotFound;
  out.cap_binding = true;
  return out;
}

LiftPlanSearch find_lift_plan(const Multigraph& g, const RotationSystem& rot, std::int64_t budget,
                              const LiftPlanOptions& options) {
  WorkBudget b(budget);
  return find_lift_plan(g, rot, b, options);
}

int ReductionTrace::depth() const {
  int d = 0;
  for (const auto& c : children) d = std::max(d, c.depth());
  return children.empty() ? 0 : d + 1;
}

std::size_t ReductionTrace::node_count() const {
  std::size_t s = 1;
  for (const auto& c : children) s += c.node_count();
  return s;
}

namespace {

struct Builder {
  WorkBudget budget;
  std::string failure;
  SearchStatus status = SearchStatus::kFound;

  std::optional<ReductionTrace> node_for(const Multigraph& g) {
    const EmbedResult er = embed(g);
    if (!er.rotation) {
      status = SearchStatus::kNotFound;
      failure = "intermediate graph is not planar";
      return std::nullopt;
    }
    return build(g, *er.rotation);
  }

  bool add_children(ReductionTrace& node, const Multigraph& host) {
    auto child_h = node_for(induced_subgraph(host, node.h).graph);
    if (!child_h) return false;
    auto child_q = node_for(contract(host, node.h).graph);
    if (!child_q) return false;
    node.children.push_back(std::move(*child_h));
    node.children.push_back(std::move(*child_q));
    return true;
  }

  std::optional<ReductionTrace> build(const Multigraph& g, const RotationSystem& rot) {
    ReductionTrace node;
    node.graph = g;
    node.digest = graph_digest(g);
    node.rotation = rot;
    if (g.vertex_count() <= 4) return node;

    const SubgraphSearch sub = find_contractible_subgraph(g, budget, true);
    if (sub.status == SearchStatus::kBudgetExhausted) {
      status = SearchStatus::kBudgetExhausted;
      failure = "budget exhausted in subgraph search";
      return std::nullopt;
    }
    if (sub.vertices) {
      node.kind = ReductionTrace::Kind::kContract;
      node.h = *sub.vertices;
      if (!add_children(node, g)) return std::nullopt;
      return node;
    }
    const LiftPlanSearch plan = find_lift_plan(g, rot, budget, {});
    if (!plan.plan) {
      status = plan.status == SearchStatus::kBudgetExhausted ? SearchStatus::kBudgetExhausted
                                                             : SearchStatus::kNotFound;
      failure = plan.cap_binding ? "no lift plan within the path caps (at most 3 lifts of length <= 3) on a " +
                                       std::to_string(g.vertex_count()) + "-vertex graph"
                                 : "budget exhausted in lift search";
      return std::nullopt;
    }
    node.kind = ReductionTrace::Kind::kLiftContract;
    node.lifts = plan.plan->lifts;
    node.h = plan.plan->h;
    std::vector<LiftPath> paths;
    for (const auto& s : node.lifts) paths.push_back(s.path);
    node.lifted = lift_paths(g, paths).graph;
    if (!add_children(node, node.lifted)) return std::nullopt;
    return node;
  }
};

std::vector<LiftPath> paths_of(const ReductionTrace& t) {
  std::vector<LiftPath> out;
  for (const auto& s : t.lifts) out.push_back(s.path);
  return out;
}

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool replay_contract(const Multigraph& host, const ReductionTrace& t, std::string* why) {
  if (t.children.size() != 2) return fail(why, "contract node needs two children");
  const Multigraph h = induced_subgraph(host, t.h).graph;
  const Multigraph q = contract(host, t.h).graph;
  if (!contractible(h)) return fail(why, "recorded subgraph is not S5-contractible");
  if (!contractible(q)) return fail(why, "recorded quotient is not S5-contractible");
  return replay(h, t.children[0], why) && replay(q, t.children[1], why);
}

}  // namespace

ReduceResult reduce(const Multigraph& g, const RotationSystem& rot, std::int64_t budget) {
  ReduceResult out;
  if (!contractible(g)) {
    out.status = SearchStatus::kNotFound;
    out.message = "input is not S5-contractible";
    return out;
  }
  validate_rotation(g, rot);
  if (!euler_holds(g, trace_faces(g, rot))) throw GraphError("rotation system is not planar");
  Builder b{WorkBudget(budget), "", SearchStatus::kFound};
  auto trace = b.build(g, rot);
  out.work = b.budget.used();
  if (!trace) {
    out.status = b.status;
    out.message = b.failure;
    return out;
  }
  out.status = SearchStatus::kFound;
  out.trace = std::move(trace);
  return out;
}

bool replay(const Multigraph& g, const ReductionTrace& t, std::string* why) {
  if (graph_digest(g) != t.digest) return fail(why, "graph digest mismatch");
  switch (t.kind) {
    case ReductionTrace::Kind::kBase:
      return g.vertex_count() <= 4 ? true : fail(why, "leaf with more than four vertices");
    case ReductionTrace::Kind::kContract:
      return replay_contract(g, t, why);
    case ReductionTrace::Kind::kLiftContract: {
      const auto paths = paths_of(t);
      for (std::size_t i = 0; i < paths.size(); ++i) {
        const Multigraph gi = lift_paths(g, std::span<const LiftPath>(paths.data(), i)).graph;
        const FaceSet fs = trace_faces(gi, t.lifts[i].rotation);
        if (!euler_holds(gi, fs)) return fail(why, "recorded lift embedding is not planar");
        if (t.lifts[i].face < 0 || t.lifts[i].face >= static_cast<int>(fs.faces.size())) {
          return fail(why, "recorded face out of range");
        }
        const auto& vs = fs.faces[t.lifts[i].face].vertices;
        const Vertex u = paths[i].vertices.front();
        const Vertex v = paths[i].vertices.back();
        if (!std::binary_search(vs.begin(), vs.end(), u) || !std::binary_search(vs.begin(), vs.end(), v)) {
          return fail(why, "lift endpoints do not share the recorded face");
        }
      }
      const Multigraph lifted = lift_paths(g, paths).graph;
      if (graph_digest(lifted) != graph_digest(t.lifted)) return fail(why, "lifted graph digest mismatch");
      return replay_contract(lifted, t, why);
    }
  }
  return false;
}

namespace {

ExtendResult solve_contract(const Multigraph& host, const ReductionTrace& t, const Boundary& beta,
                            std::int64_t budget) {
  const int k = beta.modulus();
  const ContractResult c = contract(host, t.h);
  std::vector<int> pushed(c.graph.vertex_count(), 0);
  for (Vertex v = 0; v < host.vertex_count(); ++v) pushed[c.vertex_map[v]] += beta[v];
  const ExtendResult dq = solve_with_trace(t.children[1], Boundary(k, pushed), budget);
  if (dq.status != SearchStatus::kFound) return dq;
  ExtendResult out;
  const InternalSolver inner = [&](const Multigraph&, const Boundary& b) {
    const ExtendResult r = solve_with_trace(t.children[0], b, budget);
    return SearchResult{r.status, r.orientation, r.nodes};
  };
  const VertexSet sets[] = {t.h};
  out = extend_through_contraction(host, sets, *dq.orientation, beta, budget, inner);
  out.nodes += dq.nodes;
  return out;
}

}  // namespace

ExtendResult solve_with_trace(const ReductionTrace& t, const Boundary& beta, std::int64_t budget) {
  switch (t.kind) {
    case ReductionTrace::Kind::kBase: {
      const SearchResult r = find_beta_orientation(t.graph, beta, budget);
      return {r.status, r.orientation, r.nodes};
    }
    case ReductionTrace::Kind::kContract:
      return solve_contract(t.graph, t, beta, budget);
    case ReductionTrace::Kind::kLiftContract: {
      ExtendResult r = solve_contract(t.lifted, t, beta, budget);
      if (r.status != SearchStatus::kFound) return r;
      const auto paths = paths_of(t);
      r.orientation = extend_through_lifting(t.graph, paths, *r.orientation, beta);
      return r;
    }
  }
  return {};
}

ExtendResult solve_beta(const Multigraph& g, const RotationSystem& rot, const Boundary& beta, std::int64_t budget) {
  const ReduceResult red = reduce(g, rot, budget);
  if (!red.trace) return {red.status, std::nullopt, red.work};
  ExtendResult r = solve_with_trace(*red.trace, beta, budget);
  if (r.orientation && !verify_beta_orientation(g, *r.orientation, beta)) {
    throw std::logic_error("solve_beta produced an unverified orientation");
  }
  return r;
}

}  // namespace sz5
