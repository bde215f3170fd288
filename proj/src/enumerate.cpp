#include <algorithm>
#include <numeric>

#include <omp.h>

#include "sz5/multigraph.hpp"

namespace sz5 {

namespace {

struct PairTable {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> perms;  // every vertex permutation, as pair-index maps

  explicit PairTable(int n_) : n(n_) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      std::vector<int> map(pairs.size());
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        map[i] = pair_index(n, p[pairs[i].first], p[pairs[i].second]);
      }
      perms.push_back(std::move(map));
    } while (std::next_permutation(p.begin(), p.end()));
  }
};

// True when no vertex permutation yields a lexicographically smaller vector.
bool is_canonical(const std::vector<int>& mult, const PairTable& table) {
  for (const auto& map : table.perms) {
    for (std::size_t i = 0; i < map.size(); ++i) {
      const int c = mult[map[i]];
      if (c < mult[i]) return false;
      if (c > mult[i]) break;
    }
  }
  return true;
}

struct Limits {
  int cap = 0;
  int min_edges = 0;
  int max_edges = 0;
};

Limits resolve(const EnumerationBounds& b) {
  if (b.vertex_count < 0 || b.vertex_count > 5) {
    throw GraphError("enumerate_class supports 0..5 vertices");
  }
  if (!b.max_edges && !b.mu_max) {
    throw GraphError("enumeration bounds admit infinitely many graphs: give max_edges or mu_max");
  }
  Limits l;
  const int pairs = pair_count(b.vertex_count);
  l.cap = b.mu_max ? *b.mu_max : *b.max_edges;
  l.min_edges = std::max(0, b.min_edges);
  l.max_edges = b.max_edges ? *b.max_edges : l.cap * pairs;
  l.max_edges = std::min(l.max_edges, l.cap * pairs);
  return l;
}

bool accept(const std::vector<int>& mult, const EnumerationBounds& b, const PairTable& table) {
  const int n = b.vertex_count;
  std::vector<int> deg(n, 0);
  for (std::size_t i = 0; i < mult.size(); ++i) {
    deg[table.pairs[i].first] += mult[i];
    deg[table.pairs[i].second] += mult[i];
  }
  for (int d : deg) {
    if (d < b.delta_min) return false;
  }
  if (!is_canonical(mult, table)) return false;
  if (b.connected && n > 0) {
    const Multigraph g = Multigraph::from_multiplicities(n, mult);
    if (!g.is_connected()) return false;
  }
  return true;
}

// Depth-first over pair multiplicities starting at position `pos`.
void generate(std::vector<int>& mult, std::size_t pos, int sum, const Limits& l,
              const EnumerationBounds& b, const PairTable& table, std::vector<std::vector<int>>& out) {
  const int remaining_pairs = static_cast<int>(mult.size() - pos);
  if (sum + remaining_pairs * l.cap < l.min_edges) return;
  if (pos == mult.size()) {
    if (sum >= l.min_edges && sum <= l.max_edges && accept(mult, b, table)) out.push_back(mult);
    return;
  }
  for (int x = 0; x <= l.cap && sum + x <= l.max_edges; ++x) {
    mult[pos] = x;
    generate(mult, pos + 1, sum + x, l, b, table, out);
  }
  mult[pos] = 0;
}

std::vector<Multigraph> finish(std::vector<std::vector<int>>& found, int n) {
  std::sort(found.begin(), found.end());
  std::vector<Multigraph> out;
  out.reserve(found.size());
  for (const auto& m : found) out.push_back(Multigraph::from_multiplicities(n, m));
  return out;
}

}  // namespace

std::vector<Multigraph> enumerate_class_serial(const EnumerationBounds& bounds) {
  const Limits l = resolve(bounds);
  const PairTable table(bounds.vertex_count);
  std::vector<int> mult(table.pairs.size(), 0);
  std::vector<std::vector<int>> found;
  generate(mult, 0, 0, l, bounds, table, found);
  return finish(found, bounds.vertex_count);
}

std::vector<Multigraph> enumerate_class(const EnumerationBounds& bounds, int jobs) {
  const Limits l = resolve(bounds);
  const PairTable table(bounds.vertex_count);
  const std::size_t pairs = table.pairs.size();
  if (pairs < 2) return enumerate_class_serial(bounds);

  // Work items are the (mult[0], mult[1]) prefixes.
  std::vector<std::pair<int, int>> prefixes;
  for (int a = 0; a <= l.cap; ++a) {
    for (int b = 0; b <= l.cap && a + b <= l.max_edges; ++b) prefixes.emplace_back(a, b);
  }
  std::vector<std::vector<std::vector<int>>> per_item(prefixes.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    std::vector<int> mult(pairs, 0);
    mult[0] = prefixes[i].first;
    mult[1] = prefixes[i].second;
    generate(mult, 2, mult[0] + mult[1], l, bounds, table, per_item[i]);
  }
  std::vector<std::vector<int>> found;
  for (auto& chunk : per_item) {
    for (auto& m : chunk) found.push_back(std::move(m));
  }
  return finish(found, bounds.vertex_count);
}

}  // namespace sz5
