#include <algorithm>

#include "sz5/catalog.hpp"

namespace sz5 {

namespace {

// Quotient edge counts of N5 members, by part count.
bool n5_size(int t, int external) {
  switch (t) {
    case 2: return external == 2 || external == 3;
    case 3: return external == 7;
    case 4: return external == 12;
    default: return false;
  }
}

}  // namespace

ContractibilityResult is_s5_contractible(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw GraphError("contractibility needs at least two vertices");
  if (!g.is_connected()) throw GraphError("contractibility needs a connected graph");
  ContractibilityResult out;
  out.contractible = true;
  for_each_partition(n, [&](const std::vector<int>& a, int t) {
    if (t < 2) return true;
    int external = 0;
    for (const Edge& e : g.edges()) external += a[e.a] != a[e.b];
    const int w = 2 * external - 10 * t + 16;
    bool in_n5 = false;
    if (w >= 0 && n5_size(t, external)) in_n5 = n5_member(quotient_by_labels(g, a).graph);
    if (w >= 0 && !in_n5) return true;
    out.contractible = false;
    out.witness = VertexPartition::from_labels(a);
    out.witness_weight = w;
    out.witness_in_n5 = in_n5;
    return false;
  });
  return out;
}

bool small_contractible_closed_form(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > 4) throw GraphError("closed form covers at most four vertices");
  const int e = g.edge_count();
  switch (n) {
    case 2: return e >= 4;
    case 3: return e >= 8 && g.min_degree() >= 4;
    case 4: break;
    default: return false;
  }
  // Search sub-multiplicity vectors; capping each pair at min(mu, 4) loses
  // nothing since mu(G') <= 4 is required.
  const std::vector<int> mult = g.multiplicity_vector();
  const Multigraph w1 = make_named(NamedPattern::w1());
  const Multigraph w2 = make_named(NamedPattern::w2());
  std::vector<int> sub(mult.size(), 0);
  bool found = false;
  auto check = [&] {
    int edges = 0;
    for (int x : sub) edges += x;
    if (edges < 12) return;
    const Multigraph h = Multigraph::from_multiplicities(4, sub);
    if (h.min_degree() < 4) return;
    if (isomorphic(h, w1) || isomorphic(h, w2)) return;
    found = true;
  };
  // Odometer over 0..min(mult[i], 4).
  while (!found) {
    check();
    std::size_t i = 0;
    while (i < sub.size() && sub[i] == std::min(mult[i], 4)) sub[i++] = 0;
    if (i == sub.size()) break;
    ++sub[i];
  }
  return found;
}

}  // namespace sz5
