#include "sz5/orientation.hpp"

namespace sz5 {

ExtendResult extend_through_contraction(const Multigraph& g, std::span<const VertexSet> h_sets,
                                        const Orientation& d_quotient, const Boundary& beta,
                                        std::int64_t budget, const InternalSolver& solver) {
  const int k = beta.modulus();
  const ContractResult c = contract_sets(g, h_sets);
  if (static_cast<int>(d_quotient.tail.size()) != c.graph.edge_count()) {
    throw GraphError("quotient orientation does not match G/H");
  }
  // The pushed-down boundary must be what D_q realizes.
  std::vector<int> pushed(c.graph.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) pushed[c.vertex_map[v]] += beta[v];
  if (!verify_beta_orientation(c.graph, d_quotient, Boundary(k, pushed))) {
    throw GraphError("quotient orientation does not realize the pushed boundary");
  }

  ExtendResult out;
  Orientation d;
  d.tail.assign(g.edge_count(), -1);
  std::vector<int> external(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    const EdgeId q = c.edge_map[e.id];
    if (q == kRemovedEdge) continue;
    // Pick the original endpoint that maps to the quotient tail.
    const Vertex qt = d_quotient.tail[q];
    d.tail[e.id] = c.vertex_map[e.a] == qt ? e.a : e.b;
    ++external[d.tail[e.id]];
    --external[e.other(d.tail[e.id])];
  }

  for (const VertexSet& s : h_sets) {
    const SubgraphResult h = induced_subgraph(g, s);
    std::vector<int> local(h.vertices.size());
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
      const Vertex v = h.vertices[i];
      local[i] = mod(beta[v] - external[v], k);
      sum += local[i];
    }
    if (sum % k != 0) throw std::logic_error("internal boundary does not sum to zero");
    const Boundary inner(k, local);
    const SearchResult r = solver ? solver(h.graph, inner) : find_beta_orientation(h.graph, inner, budget);
    out.nodes += r.nodes;
    if (r.status != SearchStatus::kFound) {
      out.status = r.status;
      return out;
    }
    for (const Edge& e : h.graph.edges()) d.tail[h.edge_map[e.id]] = h.vertices[r.orientation->tail[e.id]];
  }
  if (!verify_beta_orientation(g, d, beta)) throw std::logic_error("assembled orientation failed verification");
  out.status = SearchStatus::kFound;
  out.orientation = std::move(d);
  return out;
}

Orientation extend_through_lifting(const Multigraph& g, std::span<const LiftPath> lifts,
                                   const Orientation& d_lifted, const Boundary& beta) {
  const LiftResult lifted = lift_paths(g, lifts);
  if (static_cast<int>(d_lifted.tail.size()) != lifted.graph.edge_count()) {
    throw GraphError("lifted orientation does not match the lifted graph");
  }
  Orientation d;
  d.tail.assign(g.edge_count(), -1);
  for (const Edge& e : g.edges()) {
    const EdgeId q = lifted.edge_map[e.id];
    if (q != kRemovedEdge) d.tail[e.id] = d_lifted.tail[q];
  }
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    const LiftPath& p = lifts[i];
    const bool along = d_lifted.tail[lifted.new_edges[i]] == p.vertices.front();
    for (std::size_t j = 0; j < p.edges.size(); ++j) d.tail[p.edges[j]] = along ? p.vertices[j] : p.vertices[j + 1];
  }
  if (!verify_beta_orientation(g, d, beta)) throw GraphError("replayed orientation does not realize the boundary");
  return d;
}

}  // namespace sz5
