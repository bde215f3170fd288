#include "sz5/orientation.hpp"

#include <algorithm>
#include <numeric>

namespace sz5 {

Boundary::Boundary(int k, std::vector<int> values) : k_(k), values_(std::move(values)) {
  if (k < 3 || k % 2 == 0) throw GraphError("boundary modulus must be odd and at least 3");
  std::int64_t sum = 0;
  for (int& x : values_) {
    x = mod(x, k);
    sum += x;
  }
  if (sum % k != 0) throw GraphError("boundary values do not sum to 0 mod k");
}

Boundary Boundary::zero(int k, int vertex_count) { return Boundary(k, std::vector<int>(vertex_count, 0)); }

std::int64_t Boundary::count(int k, int vertex_count) {
  std::int64_t c = 1;
  for (int i = 0; i + 1 < vertex_count; ++i) c *= k;
  return c;
}

Boundary Boundary::from_index(int k, int vertex_count, std::int64_t index) {
  std::vector<int> values(vertex_count, 0);
  std::int64_t sum = 0;
  for (int v = vertex_count - 2; v >= 0; --v) {
    values[v] = static_cast<int>(index % k);
    index /= k;
    sum += values[v];
  }
  if (vertex_count > 0) values[vertex_count - 1] = mod(-sum, k);
  return Boundary(k, std::move(values));
}

Orientation orientation_as_stored(const Multigraph& g) {
  Orientation d;
  d.tail.reserve(g.edge_count());
  for (const Edge& e : g.edges()) d.tail.push_back(e.a);
  return d;
}

std::vector<int> imbalance(const Multigraph& g, const Orientation& d) {
  if (static_cast<int>(d.tail.size()) != g.edge_count()) throw GraphError("orientation does not cover the graph");
  std::vector<int> out(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    const Vertex t = d.tail[e.id];
    if (t != e.a && t != e.b) throw GraphError("orientation tail is not an endpoint of edge " + std::to_string(e.id));
    ++out[t];
    --out[e.other(t)];
  }
  return out;
}

bool verify_beta_orientation(const Multigraph& g, const Orientation& d, const Boundary& beta) {
  if (beta.vertex_count() != g.vertex_count()) throw GraphError("boundary does not match graph");
  const auto imb = imbalance(g, d);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mod(imb[v], beta.modulus()) != beta[v]) return false;
  }
  return true;
}

namespace {

class BetaSearch {
 public:
  BetaSearch(const Multigraph& g, const Boundary& beta, std::int64_t budget)
      : g_(g), k_(beta.modulus()), beta_(beta.values()), budget_(budget) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    order_.resize(m);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&g](EdgeId x, EdgeId y) {
      const Edge& ex = g.edge(x);
      const Edge& ey = g.edge(y);
      return g.degree(ex.a) + g.degree(ex.b) > g.degree(ey.a) + g.degree(ey.b);
    });
    remaining_ = g.degrees();
    current_.assign(n, 0);
    tail_.assign(m, -1);
    // Parallel class of each edge, and whether a backward edge was placed in it.
    class_of_ = class_ids();
    backward_placed_.assign(pair_count(n), 0);
  }

  SearchResult run() {
    SearchResult out;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (!feasible(v)) {
        out.status = SearchStatus::kNotFound;
        return out;
      }
    }
    const bool ok = extend(0);
    out.nodes = nodes_;
    if (ok) {
      out.status = SearchStatus::kFound;
      out.orientation = Orientation{tail_};
    } else {
      out.status = exhausted_ ? SearchStatus::kBudgetExhausted : SearchStatus::kNotFound;
    }
    return out;
  }

 private:
  std::vector<int> class_ids() const {
    std::vector<int> ids(g_.edge_count());
    for (const Edge& e : g_.edges()) ids[e.id] = pair_index(g_.vertex_count(), e.a, e.b);
    return ids;
  }

  // Some s in {-r, -r+2, .., r} with c + s = beta (mod k).
  bool feasible(Vertex v) const {
    const int r = remaining_[v];
    if (r >= k_ - 1) return true;
    for (int s = -r; s <= r; s += 2) {
      if (mod(current_[v] + s, k_) == beta_[v]) return true;
    }
    return false;
  }

  bool extend(std::size_t i) {
    if (i == order_.size()) return true;
    const Edge& e = g_.edge(order_[i]);
    const Vertex lo = std::min(e.a, e.b);
    const Vertex hi = std::max(e.a, e.b);
    const int cls = class_of_[e.id];
    for (int dir = 0; dir < 2; ++dir) {
      // Forward edges of a parallel class precede backward ones.
      if (dir == 0 && backward_placed_[cls] > 0) continue;
      if (budget_ > 0 && nodes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      const Vertex t = dir == 0 ? lo : hi;
      const Vertex h = dir == 0 ? hi : lo;
      tail_[e.id] = t;
      ++current_[t];
      --current_[h];
      --remaining_[t];
      --remaining_[h];
      backward_placed_[cls] += dir;
      if (feasible(t) && feasible(h) && extend(i + 1)) return true;
      backward_placed_[cls] -= dir;
      ++remaining_[t];
      ++remaining_[h];
      --current_[t];
      ++current_[h];
      tail_[e.id] = -1;
      if (exhausted_) return false;
    }
    return false;
  }

  const Multigraph& g_;
  int k_;
  std::vector<int> beta_;
  std::int64_t budget_;
  std::vector<EdgeId> order_;
  std::vector<int> remaining_, current_, class_of_, backward_placed_;
  std::vector<Vertex> tail_;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SearchResult find_beta_orientation(const Multigraph& g, const Boundary& beta, std::int64_t budget) {
  if (beta.vertex_count() != g.vertex_count()) throw GraphError("boundary does not match graph");
  SearchResult r = BetaSearch(g, beta, budget).run();
  if (r.orientation && !verify_beta_orientation(g, *r.orientation, beta)) {
    throw std::logic_error("orientation search returned an unverified orientation");
  }
  return r;
}

SearchResult mod_orientation(const Multigraph& g, int k, std::int64_t budget) {
  return find_beta_orientation(g, Boundary::zero(k, g.vertex_count()), budget);
}

}  // namespace sz5
