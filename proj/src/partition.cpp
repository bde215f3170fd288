#include "sz5/partition.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include <omp.h>

namespace sz5 {

VertexPartition VertexPartition::from_labels(std::span<const int> labels) {
  VertexPartition p;
  p.rgs_.resize(labels.size());
  std::vector<int> seen;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto it = std::find(seen.begin(), seen.end(), labels[v]);
    if (it == seen.end()) {
      seen.push_back(labels[v]);
      p.rgs_[v] = static_cast<int>(seen.size()) - 1;
    } else {
      p.rgs_[v] = static_cast<int>(it - seen.begin());
    }
  }
  p.parts_ = static_cast<int>(seen.size());
  return p;
}

VertexPartition VertexPartition::from_parts(int vertex_count, std::span<const VertexSet> parts) {
  std::vector<int> labels(vertex_count, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw GraphError("empty part in partition");
    for (Vertex v : parts[i]) {
      if (v < 0 || v >= vertex_count) throw GraphError("partition vertex out of range");
      if (labels[v] >= 0) throw GraphError("partition parts overlap");
      labels[v] = static_cast<int>(i);
    }
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
    throw GraphError("partition does not cover every vertex");
  }
  return from_labels(labels);
}

VertexPartition VertexPartition::singletons(int vertex_count) {
  std::vector<int> labels(vertex_count);
  for (int i = 0; i < vertex_count; ++i) labels[i] = i;
  return from_labels(labels);
}

VertexPartition VertexPartition::whole(int vertex_count) {
  return from_labels(std::vector<int>(vertex_count, 0));
}

std::vector<VertexSet> VertexPartition::parts() const {
  std::vector<VertexSet> out(parts_);
  for (Vertex v = 0; v < vertex_count(); ++v) out[rgs_[v]].push_back(v);
  return out;
}

namespace {

void require_fits(const Multigraph& g, const VertexPartition& p) {
  if (p.vertex_count() != g.vertex_count()) throw GraphError("partition does not match graph");
}

int weight_of_labels(const Multigraph& g, std::span<const int> labels, int t) {
  int external = 0;
  for (const Edge& e : g.edges()) external += labels[e.a] != labels[e.b];
  return 2 * external - 10 * t + 16;
}

void extend_rgs(std::vector<int>& a, int pos, int max_label,
                const std::function<bool(const std::vector<int>&, int)>& visit, bool& stop) {
  if (stop) return;
  if (pos == static_cast<int>(a.size())) {
    if (!visit(a, max_label + 1)) stop = true;
    return;
  }
  for (int x = 0; x <= max_label + 1 && !stop; ++x) {
    a[pos] = x;
    extend_rgs(a, pos + 1, std::max(max_label, x), visit, stop);
  }
}

// Walks completions of a fixed prefix.
void for_each_completion(std::vector<int> prefix, int n,
                         const std::function<bool(const std::vector<int>&, int)>& visit) {
  const int pos = static_cast<int>(prefix.size());
  int max_label = -1;
  for (int x : prefix) max_label = std::max(max_label, x);
  prefix.resize(n, 0);
  bool stop = false;
  extend_rgs(prefix, pos, max_label, visit, stop);
}

struct Best {
  int weight = std::numeric_limits<int>::max();
  std::vector<int> labels;
  bool found = false;

  void offer(int w, const std::vector<int>& l) {
    if (!found || w < weight || (w == weight && l < labels)) {
      weight = w;
      labels = l;
      found = true;
    }
  }
};

WeightResult degenerate_weight(const Multigraph& g) {
  // K1: the one-part formula. Empty graph: t = 0.
  const int n = g.vertex_count();
  return {n == 1 ? 6 : 16, VertexPartition::whole(n)};
}

Best scan_weight(const Multigraph& g, std::vector<int> prefix, bool connected_only) {
  Best best;
  for_each_completion(std::move(prefix), g.vertex_count(),
                      [&](const std::vector<int>& a, int t) {
                        if (t < 2) return true;
                        const int w = weight_of_labels(g, a, t);
                        if (best.found && w > best.weight) return true;
                        if (connected_only && !parts_connected(g, a, t)) return true;
                        best.offer(w, a);
                        return true;
                      });
  return best;
}

}  // namespace

void for_each_partition(int n, const std::function<bool(const std::vector<int>&, int)>& visit) {
  if (n == 0) {
    visit({}, 0);
    return;
  }
  for_each_completion({0}, n, visit);
}

bool parts_connected(const Multigraph& g, std::span<const int> labels, int part_count) {
  const int n = g.vertex_count();
  // Union-find over intra-part edges; connected iff components == parts.
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (const Edge& e : g.edges()) {
    if (labels[e.a] != labels[e.b]) continue;
    const int ra = find(e.a);
    const int rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps == part_count;
}

ContractResult quotient(const Multigraph& g, const VertexPartition& p) {
  require_fits(g, p);
  return quotient_by_labels(g, p.labels());
}

int partition_weight(const Multigraph& g, const VertexPartition& p) {
  require_fits(g, p);
  const int w = weight_of_labels(g, p.labels(), p.part_count());
  assert(w % 2 == 0);
  return w;
}

WeightResult graph_weight_serial(const Multigraph& g) {
  if (g.vertex_count() < 2) return degenerate_weight(g);
  const Best best = scan_weight(g, {0}, true);
  return {best.weight, VertexPartition::from_labels(best.labels)};
}

WeightResult graph_weight(const Multigraph& g, int jobs) {
  const int n = g.vertex_count();
  if (n < 5) return graph_weight_serial(g);
  // Work items: every restricted-growth prefix of length 4 (15 of them).
  std::vector<std::vector<int>> prefixes;
  for_each_partition(4, [&](const std::vector<int>& a, int) {
    prefixes.push_back(a);
    return true;
  });
  std::vector<Best> partial(prefixes.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t i = 0; i < prefixes.size(); ++i) partial[i] = scan_weight(g, prefixes[i], true);
  Best best;
  for (const Best& b : partial) {
    if (b.found) best.offer(b.weight, b.labels);
  }
  return {best.weight, VertexPartition::from_labels(best.labels)};
}

WeightResult graph_weight_all_partitions(const Multigraph& g) {
  if (g.vertex_count() < 2) return degenerate_weight(g);
  const Best best = scan_weight(g, {0}, false);
  return {best.weight, VertexPartition::from_labels(best.labels)};
}

int co_weight(const Multigraph& h) { return 6 - graph_weight(h).weight; }

VertexPartition restored_partition(const Multigraph& g, std::span<const VertexSet> h_parts,
                                   const VertexPartition& p_quotient) {
  const ContractResult c = contract_sets(g, h_parts);
  if (p_quotient.vertex_count() != c.graph.vertex_count()) {
    throw GraphError("quotient partition does not match the contracted graph");
  }
  std::vector<int> labels(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) labels[v] = p_quotient.part_of(c.vertex_map[v]);
  return VertexPartition::from_labels(labels);
}

int refinement_residual(const Multigraph& g, const VertexPartition& p,
                        std::span<const VertexPartition> refinements, int l) {
  require_fits(g, p);
  if (l < 0 || l > p.part_count() || static_cast<int>(refinements.size()) < l) {
    throw GraphError("refinement count out of range");
  }
  const auto parts = p.parts();
  // P_l: parts i < l split by Q_i, the rest kept whole.
  std::vector<int> labels(g.vertex_count(), -1);
  int next = 0;
  int gain = 0;
  for (int i = 0; i < p.part_count(); ++i) {
    if (i < l) {
      const VertexPartition& q = refinements[i];
      if (q.vertex_count() != static_cast<int>(parts[i].size())) {
        throw GraphError("refinement does not match its part");
      }
      const SubgraphResult h = induced_subgraph(g, parts[i]);
      gain += 6 - partition_weight(h.graph, q);
      for (std::size_t j = 0; j < parts[i].size(); ++j) labels[parts[i][j]] = next + q.part_of(static_cast<int>(j));
      next += q.part_count();
    } else {
      for (Vertex v : parts[i]) labels[v] = next;
      ++next;
    }
  }
  const VertexPartition pl = VertexPartition::from_labels(labels);
  return partition_weight(g, p) - gain - partition_weight(g, pl);
}

int tree_packing_partition_bound(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2 || !g.is_connected()) return 0;
  int best = std::numeric_limits<int>::max();
  for_each_partition(n, [&](const std::vector<int>& a, int t) {
    if (t < 2) return true;
    int external = 0;
    for (const Edge& e : g.edges()) external += a[e.a] != a[e.b];
    best = std::min(best, external / (t - 1));
    return true;
  });
  return best;
}

}  // namespace sz5
