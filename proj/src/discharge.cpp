#include "sz5/discharge.hpp"

#include <numeric>
#include <set>

#include "sz5/catalog.hpp"

namespace sz5 {

std::string Charge::to_string() const {
  std::int64_t num = e_;
  std::int64_t den = 8;
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num /= g;
  den /= g;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

Charge sum(const std::vector<Charge>& xs) {
  Charge s;
  for (Charge x : xs) s += x;
  return s;
}

// Recognizers for H_f.
struct FaceKinds {
  std::vector<char> t222, q_min1, q2333, q2323_q2233, q2223;
};

bool is_q_cycle_with_min1(const Multigraph& h) {
  if (h.vertex_count() != 4) return false;
  // Exactly four adjacent pairs forming a 4-cycle; the two others empty.
  const auto mult = h.multiplicity_vector();
  std::vector<int> simple_deg(4, 0);
  int pairs = 0;
  int min_mult = 1 << 30;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) {
      const int x = mult[pair_index(4, u, v)];
      if (x == 0) continue;
      ++pairs;
      ++simple_deg[u];
      ++simple_deg[v];
      min_mult = std::min(min_mult, x);
    }
  }
  if (pairs != 4) return false;
  for (int d : simple_deg) {
    if (d != 2) return false;
  }
  return min_mult == 1;
}

FaceKinds classify(const Multigraph& g, const FaceSet& fs) {
  static const Multigraph t222 = make_named(NamedPattern::t(2, 2, 2));
  static const Multigraph q2333 = make_named(NamedPattern::q(2, 3, 3, 3));
  static const Multigraph q2323 = make_named(NamedPattern::q(2, 3, 2, 3));
  static const Multigraph q2233 = make_named(NamedPattern::q(2, 2, 3, 3));
  static const Multigraph q2223 = make_named(NamedPattern::q(2, 2, 2, 3));
  FaceKinds k;
  const std::size_t n = fs.faces.size();
  k.t222.assign(n, 0);
  k.q_min1.assign(n, 0);
  k.q2333.assign(n, 0);
  k.q2323_q2233.assign(n, 0);
  k.q2223.assign(n, 0);
  for (std::size_t f = 0; f < n; ++f) {
    const auto& vs = fs.faces[f].vertices;
    if (vs.size() != 3 && vs.size() != 4) continue;
    const Multigraph h = induced_subgraph(g, vs).graph;
    k.t222[f] = isomorphic(h, t222).has_value();
    k.q_min1[f] = is_q_cycle_with_min1(h);
    k.q2333[f] = isomorphic(h, q2333).has_value();
    k.q2323_q2233[f] = isomorphic(h, q2323).has_value() || isomorphic(h, q2233).has_value();
    k.q2223[f] = isomorphic(h, q2223).has_value();
  }
  return k;
}

}  // namespace

Charge DischargeTranscript::total0() const { return sum(ch0); }
Charge DischargeTranscript::total1() const { return sum(ch1); }
Charge DischargeTranscript::total2() const { return sum(ch2); }

DischargeTranscript discharge(const Multigraph& g, const RotationSystem& rot) {
  const FaceSet fs = trace_faces(g, rot);
  DischargeTranscript tr;
  const int nf = static_cast<int>(fs.faces.size());
  for (const Face& f : fs.faces) {
    tr.degrees.push_back(f.degree());
    tr.ch0.push_back(Charge::whole(f.degree()) - Charge::eighths(20));
  }
  tr.chains = weak_adjacency(g, fs);
  const FaceKinds kinds = classify(g, fs);

  // R1: each 3+-face end of a chain sends 1/4 to every 2-face on it.
  tr.ch1 = tr.ch0;
  for (int c = 0; c < static_cast<int>(tr.chains.size()); ++c) {
    const WeakAdjacency& w = tr.chains[c];
    for (int end : {w.from, w.to}) {
      for (int two : w.two_faces) {
        tr.transfers.push_back({"R1", end, two, kQuarter, c});
        tr.ch1[end] -= kQuarter;
        tr.ch1[two] += kQuarter;
      }
    }
  }

  // R2 on chains through exactly one 2-face, both directions, every rule
  // that applies.
  tr.ch2 = tr.ch1;
  for (int c = 0; c < static_cast<int>(tr.chains.size()); ++c) {
    const WeakAdjacency& w = tr.chains[c];
    for (auto [f1, f2] : {std::pair{w.from, w.to}, std::pair{w.to, w.from}}) {
      std::vector<std::pair<std::string, Charge>> fired;
      const int d1 = tr.degrees[f1];
      if (d1 >= 5) fired.emplace_back("R2.1", kQuarter);
      if (d1 == 4 && kinds.q_min1[f1]) fired.emplace_back("R2.2", kEighth);
      if (d1 == 4 && kinds.t222[f2]) fired.emplace_back("R2.3", kEighth);
      if (fired.empty()) continue;
      if (w.t == 1) {
        if (tr.t1_candidates.empty() || tr.t1_candidates.back() != c) tr.t1_candidates.push_back(c);
        continue;
      }
      if (w.t != 2) continue;
      for (const auto& [rule, amount] : fired) {
        tr.transfers.push_back({rule, f1, f2, amount, c});
        tr.ch2[f1] -= amount;
        tr.ch2[f2] += amount;
      }
    }
  }
  for (int f = 0; f < nf; ++f) {
    if (tr.ch2[f] < Charge()) tr.negative.push_back(f);
  }
  return tr;
}

std::vector<FaceViolation> face_config_scan(const Multigraph& g, const RotationSystem& rot) {
  const FaceSet fs = trace_faces(g, rot);
  const auto chains = weak_adjacency(g, fs);
  const FaceKinds kinds = classify(g, fs);
  const int nf = static_cast<int>(fs.faces.size());
  // Neighbours of each face: any chain, and chains with t = 2.
  std::vector<std::set<int>> any(nf), via2(nf);
  for (const WeakAdjacency& w : chains) {
    any[w.from].insert(w.to);
    any[w.to].insert(w.from);
    if (w.t == 2) {
      via2[w.from].insert(w.to);
      via2[w.to].insert(w.from);
    }
  }
  auto count_if = [&](const std::set<int>& fs_, auto pred) {
    int c = 0;
    for (int x : fs_) c += pred(x) ? 1 : 0;
    return c;
  };
  auto deg = [&](int f) { return fs.faces[f].degree(); };

  std::vector<FaceViolation> out;
  for (int f = 0; f < nf; ++f) {
    const int five_via2 = count_if(via2[f], [&](int x) { return x != f && deg(x) >= 5; });
    if (kinds.t222[f]) {
      const int four_plus = count_if(any[f], [&](int x) { return x != f && deg(x) >= 4; });
      if (four_plus < 2) {
        out.push_back({f, 1, "T222 face weakly adjacent to " + std::to_string(four_plus) + " 4+-face(s)"});
      }
    }
    if (kinds.q2333[f] && five_via2 == 0) {
      out.push_back({f, 2, "Q2333 face has no 5+-face neighbour via 2K2"});
    }
    if (kinds.q2323_q2233[f]) {
      const bool near_three = count_if(any[f], [&](int x) { return x != f && deg(x) == 3; }) > 0;
      if (near_three && five_via2 == 0) {
        out.push_back({f, 3, "Q2323/Q2233 face next to a 3-face has no 5+-face neighbour via 2K2"});
      }
    }
    if (kinds.q2223[f]) {
      const int t222_via2 = count_if(via2[f], [&](int x) { return x != f && deg(x) == 3 && kinds.t222[x]; });
      if (t222_via2 > 2) {
        out.push_back({f, 4, "Q2223 face weakly adjacent via 2K2 to " + std::to_string(t222_via2) + " T222 3-faces"});
      }
    }
  }
  return out;
}

}  // namespace sz5
