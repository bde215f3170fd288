#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

#include "sz5/multigraph.hpp"

namespace sz5 {

namespace {

class IsoSearch {
 public:
  IsoSearch(const Multigraph& g, const Multigraph& h)
      : n_(g.vertex_count()),
        mg_(g.multiplicity_matrix()),
        mh_(h.multiplicity_matrix()),
        dg_(g.degrees()),
        dh_(h.degrees()),
        map_(n_, -1),
        used_(n_, 0) {}

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(int i) {
    if (i == n_) return true;
    for (Vertex c = 0; c < n_; ++c) {
      if (used_[c] || dg_[i] != dh_[c]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = mg_[i * n_ + j] == mh_[c * n_ + map_[j]];
      if (!ok) continue;
      map_[i] = c;
      used_[c] = 1;
      if (extend(i + 1)) return true;
      used_[c] = 0;
      map_[i] = -1;
    }
    return false;
  }

  int n_;
  std::vector<int> mg_, mh_, dg_, dh_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

class PatternSearch {
 public:
  PatternSearch(const Multigraph& g, const Multigraph& p, PatternMode mode)
      : ng_(g.vertex_count()),
        np_(p.vertex_count()),
        mg_(g.multiplicity_matrix()),
        mp_(p.multiplicity_matrix()),
        mode_(mode),
        map_(np_, -1),
        used_(ng_, 0) {}

  std::vector<std::vector<Vertex>> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  bool compatible(int pm, int gm) const {
    return mode_ == PatternMode::kSubgraph ? pm <= gm : pm == gm;
  }

  void extend(int i) {
    if (i == np_) {
      found_.push_back(map_);
      return;
    }
    for (Vertex c = 0; c < ng_; ++c) {
      if (used_[c]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = compatible(mp_[i * np_ + j], mg_[c * ng_ + map_[j]]);
      if (!ok) continue;
      map_[i] = c;
      used_[c] = 1;
      extend(i + 1);
      used_[c] = 0;
    }
    map_[i] = -1;
  }

  int ng_, np_;
  std::vector<int> mg_, mp_;
  PatternMode mode_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::vector<std::vector<Vertex>> found_;
};

constexpr int kExhaustiveCanonLimit = 9;

}  // namespace

std::optional<std::vector<Vertex>> isomorphic(const Multigraph& g, const Multigraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
    return std::nullopt;
  }
  auto dg = g.degrees();
  auto dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  return IsoSearch(g, h).run();
}

std::vector<std::vector<Vertex>> find_pattern(const Multigraph& g, const Multigraph& pattern,
                                              PatternMode mode, PatternDedup dedup) {
  if (pattern.vertex_count() > g.vertex_count()) return {};
  auto all = PatternSearch(g, pattern, mode).run();
  if (dedup == PatternDedup::kNone) return all;
  std::vector<std::vector<Vertex>> out;
  std::set<std::vector<Vertex>> images;
  for (auto& m : all) {
    auto key = m;
    std::sort(key.begin(), key.end());
    if (images.insert(key).second) out.push_back(std::move(m));
  }
  return out;
}

std::vector<int> canonical_form(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > kExhaustiveCanonLimit) {
    throw GraphError("exhaustive canonical form limited to " + std::to_string(kExhaustiveCanonLimit) +
                     " vertices");
  }
  const auto m = g.multiplicity_matrix();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = g.multiplicity_vector();
  std::vector<int> cur(best.size());
  do {
    // Build lazily and bail out as soon as the candidate exceeds the best.
    std::size_t idx = 0;
    bool smaller = false;
    bool larger = false;
    for (int u = 0; u < n && !larger; ++u) {
      for (int v = u + 1; v < n; ++v, ++idx) {
        cur[idx] = m[perm[u] * n + perm[v]];
        if (!smaller) {
          if (cur[idx] < best[idx]) {
            smaller = true;
          } else if (cur[idx] > best[idx]) {
            larger = true;
            break;
          }
        }
      }
    }
    if (smaller) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string canonical_hash(const Multigraph& g) {
  const int n = g.vertex_count();
  const bool exhaustive = n <= 8;
  const std::vector<int> form = exhaustive ? canonical_form(g) : g.multiplicity_vector();
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  for (int x : form) mix(static_cast<std::uint64_t>(x));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return (exhaustive ? "" : "L") + std::string(buf);
}

}  // namespace sz5
