#include <atomic>
#include <limits>

#include <omp.h>

#include "sz5/orientation.hpp"

namespace sz5 {

namespace {

void check_modulus(int k) {
  if (k < 3 || k % 2 == 0) throw GraphError("modulus must be odd and at least 3");
}

}  // namespace

SzkResult is_strongly_zk_serial(const Multigraph& g, int k, std::int64_t budget) {
  check_modulus(k);
  const int n = g.vertex_count();
  const std::int64_t total = Boundary::count(k, n);
  SzkResult out;
  for (std::int64_t i = 0; i < total; ++i) {
    const Boundary beta = Boundary::from_index(k, n, i);
    const SearchResult r = find_beta_orientation(g, beta, budget);
    out.nodes += r.nodes;
    ++out.boundaries_checked;
    if (r.status == SearchStatus::kNotFound) {
      out.witness = beta;
      out.budget_exhausted = false;
      return out;
    }
    if (r.status == SearchStatus::kBudgetExhausted) out.budget_exhausted = true;
  }
  out.holds = !out.budget_exhausted;
  return out;
}

SzkResult is_strongly_zk(const Multigraph& g, int k, std::int64_t budget, int jobs) {
  check_modulus(k);
  const int n = g.vertex_count();
  const std::int64_t total = Boundary::count(k, n);
  // Least refuted index seen so far; larger indices are skipped.
  std::atomic<std::int64_t> least_failure{std::numeric_limits<std::int64_t>::max()};
  std::atomic<bool> exhausted{false};
  std::int64_t nodes = 0;
  std::int64_t checked = 0;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) reduction(+ : nodes, checked)
  for (std::int64_t i = 0; i < total; ++i) {
    if (i > least_failure.load(std::memory_order_relaxed)) continue;
    const SearchResult r = find_beta_orientation(g, Boundary::from_index(k, n, i), budget);
    nodes += r.nodes;
    ++checked;
    if (r.status == SearchStatus::kNotFound) {
      std::int64_t cur = least_failure.load();
      while (i < cur && !least_failure.compare_exchange_weak(cur, i)) {
      }
    } else if (r.status == SearchStatus::kBudgetExhausted) {
      exhausted = true;
    }
  }
  SzkResult out;
  out.nodes = nodes;
  out.boundaries_checked = checked;
  if (least_failure.load() != std::numeric_limits<std::int64_t>::max()) {
    out.witness = Boundary::from_index(k, n, least_failure.load());
    return out;
  }
  out.budget_exhausted = exhausted.load();
  out.holds = !out.budget_exhausted;
  return out;
}

SzkResult is_strongly_zk_exhaustive(const Multigraph& g, int k) {
  check_modulus(k);
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m > 26) throw GraphError("exhaustive orientation enumeration limited to 26 edges");
  const std::int64_t total = Boundary::count(k, n);
  // Encode the imbalance residues of vertices 0..n-2 as an odometer index.
  std::vector<std::int64_t> weight(n, 0);
  {
    std::int64_t w = 1;
    for (int v = n - 2; v >= 0; --v) {
      weight[v] = w;
      w *= k;
    }
  }
  std::vector<int> imb(n, 0);
  std::vector<char> forward(m, 1);
  for (const Edge& e : g.edges()) {
    ++imb[e.a];
    --imb[e.b];
  }
  std::vector<char> achieved(total, 0);
  auto record = [&] {
    std::int64_t idx = 0;
    for (int v = 0; v + 1 < n; ++v) idx += weight[v] * mod(imb[v], k);
    achieved[idx] = 1;
  };
  record();
  // Gray code: step j flips edge ctz(j).
  const std::uint64_t steps = std::uint64_t{1} << m;
  for (std::uint64_t j = 1; j < steps; ++j) {
    const int e = __builtin_ctzll(j);
    const Edge& ed = g.edge(e);
    const int delta = forward[e] ? -2 : 2;
    imb[ed.a] += delta;
    imb[ed.b] -= delta;
    forward[e] = !forward[e];
    record();
  }
  SzkResult out;
  out.boundaries_checked = total;
  out.nodes = static_cast<std::int64_t>(steps);
  for (std::int64_t i = 0; i < total; ++i) {
    if (!achieved[i]) {
      out.witness = Boundary::from_index(k, n, i);
      return out;
    }
  }
  out.holds = true;
  return out;
}

}  // namespace sz5
