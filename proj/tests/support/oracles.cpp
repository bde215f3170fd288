#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

std::int64_t ipow(int k, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= k;
  return r;
}

int md(std::int64_t x, int k) { return static_cast<int>(((x % k) + k) % k); }

int upper_index(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

}  // namespace

std::int64_t boundary_index(const std::vector<int>& values, int k) {
  std::int64_t idx = 0;
  for (std::size_t v = 0; v + 1 < values.size(); ++v) idx = idx * k + md(values[v], k);
  return idx;
}

std::vector<int> boundary_values(std::int64_t index, int k, int n) {
  std::vector<int> values(n, 0);
  int sum = 0;
  for (int v = n - 2; v >= 0; --v) {
    values[v] = static_cast<int>(index % k);
    index /= k;
    sum += values[v];
  }
  values[n - 1] = md(-sum, k);
  return values;
}

std::vector<char> achievable_boundaries(const Multigraph& g, int k) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m > 26) throw std::invalid_argument("too many edges for brute force");
  std::vector<char> seen(static_cast<std::size_t>(ipow(k, std::max(0, n - 1))), 0);
  std::vector<int> imb(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(imb.begin(), imb.end(), 0);
    for (const sz5::Edge& e : g.edges()) {
      const bool forward = (mask >> e.id) & 1U;
      imb[forward ? e.a : e.b] += 1;
      imb[forward ? e.b : e.a] -= 1;
    }
    seen[boundary_index(imb, k)] = 1;
  }
  return seen;
}

bool strongly_zk(const Multigraph& g, int k) {
  const auto seen = achievable_boundaries(g, k);
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::optional<std::vector<int>> least_witness(const Multigraph& g, int k) {
  const auto seen = achievable_boundaries(g, k);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) return boundary_values(static_cast<std::int64_t>(i), k, g.vertex_count());
  }
  return std::nullopt;
}

bool has_beta_orientation(const Multigraph& g, const std::vector<int>& beta, int k) {
  return achievable_boundaries(g, k)[boundary_index(beta, k)] != 0;
}

int min_cut(const Multigraph& g) {
  const int n = g.vertex_count();
  int best = g.edge_count();
  for (std::uint32_t mask = 1; mask < (1U << (n - 1)); ++mask) {
    // Vertex n-1 always on the outside.
    int cut = 0;
    for (const sz5::Edge& e : g.edges()) cut += (((mask >> e.a) & 1U) != ((mask >> e.b) & 1U)) ? 1 : 0;
    best = std::min(best, cut);
  }
  return best;
}

std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int used) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int l = 0; l <= used; ++l) {
      cur.push_back(l);
      self(self, std::max(used, l + 1));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int partition_weight(const Multigraph& g, const std::vector<int>& labels) {
  const int t = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  int crossing = 0;
  for (const sz5::Edge& e : g.edges()) crossing += labels[e.a] != labels[e.b] ? 1 : 0;
  return 2 * crossing - 10 * t + 16;
}

bool parts_connected(const Multigraph& g, const std::vector<int>& labels) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const sz5::Edge& e : g.edges()) {
    if (labels[e.a] == labels[e.b]) parent[find(e.a)] = find(e.b);
  }
  std::set<std::pair<int, int>> roots;
  for (int v = 0; v < n; ++v) roots.insert({labels[v], find(v)});
  std::set<int> parts(labels.begin(), labels.end());
  return roots.size() == parts.size();
}

int graph_weight(const Multigraph& g) {
  int best = 1 << 30;
  for (const auto& p : all_partitions(g.vertex_count())) {
    const int t = *std::max_element(p.begin(), p.end()) + 1;
    if (t < 2 || !parts_connected(g, p)) continue;
    best = std::min(best, partition_weight(g, p));
  }
  return best;
}

std::vector<int> quotient_multiplicities(const Multigraph& g, const std::vector<int>& labels, int parts) {
  std::vector<int> upper(parts * (parts - 1) / 2, 0);
  for (const sz5::Edge& e : g.edges()) {
    if (labels[e.a] != labels[e.b]) ++upper[upper_index(parts, labels[e.a], labels[e.b])];
  }
  return upper;
}

std::vector<int> canonical(int n, const std::vector<int>& upper) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> cur(upper.size());
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) cur[upper_index(n, perm[u], perm[v])] = upper[upper_index(n, u, v)];
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool in_n5(int n, const std::vector<int>& upper) {
  // 2K2, 3K2, T133, T223, W1, W2 written out as multiplicity vectors.
  static const std::vector<std::pair<int, std::vector<int>>> members = {
      {2, {2}},
      {2, {3}},
      {3, {1, 3, 3}},
      {3, {2, 2, 3}},
      {4, {1, 1, 3, 1, 3, 3}},
      {4, {1, 2, 2, 2, 2, 3}},
  };
  const auto c = canonical(n, upper);
  for (const auto& [mn, mu] : members) {
    if (mn == n && canonical(mn, mu) == c) return true;
  }
  return false;
}

bool s5_contractible(const Multigraph& g) {
  for (const auto& p : all_partitions(g.vertex_count())) {
    const int t = *std::max_element(p.begin(), p.end()) + 1;
    if (t < 2) continue;
    if (partition_weight(g, p) < 0) return false;
    if (in_n5(t, quotient_multiplicities(g, p, t))) return false;
  }
  return true;
}

bool asf_exists(const Multigraph& g, const std::vector<int>& tails) {
  const int m = g.edge_count();
  std::vector<int> net(g.vertex_count());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(net.begin(), net.end(), 0);
    for (const sz5::Edge& e : g.edges()) {
      const int x = ((mask >> e.id) & 1U) ? 2 : 1;
      const int tail = tails[e.id];
      const int head = tail == e.a ? e.b : e.a;
      net[tail] += x;
      net[head] -= x;
    }
    if (std::all_of(net.begin(), net.end(), [](int x) { return x % 5 == 0; })) return true;
  }
  return false;
}

std::vector<std::vector<int>> four_vertex_classes(int min_edges, int max_edges, int mu_max, int delta_min) {
  std::set<std::vector<int>> seen;
  std::vector<int> mu(6, 0);
  for (int code = 0; code < ipow(mu_max + 1, 6); ++code) {
    int x = code, total = 0;
    for (int i = 0; i < 6; ++i) {
      mu[i] = x % (mu_max + 1);
      x /= mu_max + 1;
      total += mu[i];
    }
    if (total < min_edges || total > max_edges) continue;
    Multigraph g = Multigraph::from_multiplicities(4, mu);
    if (!g.is_connected() || g.min_degree() < delta_min) continue;
    seen.insert(canonical(4, mu));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace oracle
