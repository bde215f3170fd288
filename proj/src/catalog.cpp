#include "sz5/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sz5 {

namespace {

Multigraph from_pairs(int n, std::initializer_list<std::tuple<Vertex, Vertex, int>> pairs) {
  Multigraph g(n);
  for (const auto& [u, v, mult] : pairs) {
    if (mult < 0) throw GraphError("negative multiplicity in named pattern");
    for (int i = 0; i < mult; ++i) g.add_edge(u, v);
  }
  return g;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int x = std::stoi(item, &used);
    if (used != item.size()) throw GraphError("bad pattern parameter '" + item + "'");
    out.push_back(x);
  }
  return out;
}

void expect_params(const NamedPattern& p, std::size_t count) {
  if (p.params.size() != count) throw GraphError("wrong parameter count for named pattern");
  for (int x : p.params) {
    if (x < 0) throw GraphError("negative parameter in named pattern");
  }
}

}  // namespace

NamedPattern NamedPattern::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  NamedPattern p;
  try {
    if (head == "W1") return w1();
    if (head == "W2") return w2();
    if (head == "2K4") return double_k4();
    if (head == "Fstar") return fstar();
    const std::vector<int> xs = parse_ints(rest);
    if (head == "aK2") p = {Tag::kAK2, xs};
    else if (head == "T") p = {Tag::kT, xs};
    else if (head == "Q") p = {Tag::kQ, xs};
    else if (head == "P") p = {Tag::kPath, xs};
    else if (head == "C") p = {Tag::kCycle, xs};
    else throw GraphError("unknown named pattern '" + text + "'");
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const GraphError*>(&e)) throw;
    throw GraphError("bad named pattern '" + text + "'");
  }
  make_named(p);  // validates parameters
  return p;
}

std::string NamedPattern::to_string() const {
  auto joined = [this] {
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s;
  };
  switch (tag) {
    case Tag::kAK2: return "aK2:" + joined();
    case Tag::kT: return "T:" + joined();
    case Tag::kQ: return "Q:" + joined();
    case Tag::kW1: return "W1";
    case Tag::kW2: return "W2";
    case Tag::kDoubleK4: return "2K4";
    case Tag::kFstar: return "Fstar";
    case Tag::kPath: return "P:" + joined();
    case Tag::kCycle: return "C:" + joined();
  }
  return "?";
}

Multigraph make_cycle(int n, int mult) {
  if (n < 3 || mult < 0) throw GraphError("cycle needs n >= 3 and mult >= 0");
  Multigraph g(n);
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < mult; ++i) g.add_edge(v, (v + 1) % n);
  }
  return g;
}

Multigraph make_named(const NamedPattern& p) {
  using Tag = NamedPattern::Tag;
  switch (p.tag) {
    case Tag::kAK2:
      expect_params(p, 1);
      return from_pairs(2, {{0, 1, p.params[0]}});
    case Tag::kT:
      expect_params(p, 3);
      return from_pairs(3, {{0, 1, p.params[0]}, {0, 2, p.params[1]}, {1, 2, p.params[2]}});
    case Tag::kQ:
      expect_params(p, 4);
      return from_pairs(4, {{0, 1, p.params[0]}, {1, 2, p.params[1]}, {2, 3, p.params[2]}, {3, 0, p.params[3]}});
    case Tag::kW1:
      expect_params(p, 0);
      return from_pairs(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 3, 3}, {1, 3, 3}, {2, 3, 3}});
    case Tag::kW2:
      expect_params(p, 0);
      return from_pairs(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 2}, {1, 2, 2}, {1, 3, 2}, {2, 3, 3}});
    case Tag::kDoubleK4:
      expect_params(p, 0);
      return from_pairs(4, {{0, 1, 2}, {0, 2, 2}, {0, 3, 2}, {1, 2, 2}, {1, 3, 2}, {2, 3, 2}});
    case Tag::kFstar:
      expect_params(p, 0);
      return from_pairs(4, {{0, 2, 2}, {0, 3, 2}, {1, 2, 2}, {1, 3, 2}, {2, 3, 2}});
    case Tag::kPath: {
      expect_params(p, 1);
      Multigraph g(p.params[0] + 1);
      for (Vertex v = 0; v < p.params[0]; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case Tag::kCycle:
      expect_params(p, 2);
      return make_cycle(p.params[0], p.params[1]);
  }
  throw GraphError("unknown pattern tag");
}

const std::vector<Multigraph>& n5_members() {
  static const std::vector<Multigraph> members = {
      make_named(NamedPattern::ak2(2)),    make_named(NamedPattern::ak2(3)),
      make_named(NamedPattern::t(1, 3, 3)), make_named(NamedPattern::t(2, 2, 3)),
      make_named(NamedPattern::w1()),       make_named(NamedPattern::w2()),
  };
  return members;
}

bool n5_member(const Multigraph& g) {
  for (const Multigraph& m : n5_members()) {
    if (isomorphic(g, m)) return true;
  }
  return false;
}

namespace {

// Every way to delete k edges, taken as multiplicity decrements, deduplicated
// up to isomorphism, keeping those without a T113 subgraph.
std::vector<Multigraph> generate_family(int k) {
  const Multigraph t113 = make_named(NamedPattern::t(1, 1, 3));
  const std::vector<Multigraph> sources = {
      make_named(NamedPattern::ak2(2)), make_named(NamedPattern::t(1, 3, 3)),
      make_named(NamedPattern::t(2, 2, 3)), make_named(NamedPattern::double_k4())};
  std::map<std::pair<int, std::vector<int>>, Multigraph> found;
  for (const Multigraph& s : sources) {
    const int n = s.vertex_count();
    std::set<std::vector<int>> frontier = {s.multiplicity_vector()};
    for (int step = 0; step < k; ++step) {
      std::set<std::vector<int>> next;
      for (const auto& mult : frontier) {
        for (std::size_t i = 0; i < mult.size(); ++i) {
          if (mult[i] == 0) continue;
          auto m = mult;
          --m[i];
          next.insert(m);
        }
      }
      frontier = std::move(next);
    }
    for (const auto& mult : frontier) {
      const Multigraph g = Multigraph::from_multiplicities(n, mult);
      if (!find_pattern(g, t113, PatternMode::kSubgraph).empty()) continue;
      found.emplace(std::make_pair(n, canonical_form(g)), g);
    }
  }
  std::vector<Multigraph> out;
  for (auto& [key, g] : found) out.push_back(Multigraph::from_multiplicities(key.first, key.second));
  return out;
}

}  // namespace

const std::vector<Multigraph>& f_family(int k) {
  if (k != 1 && k != 2) throw GraphError("f_family is defined for k = 1 or 2");
  static const std::vector<Multigraph> f1 = generate_family(1);
  static const std::vector<Multigraph> f2 = generate_family(2);
  return k == 1 ? f1 : f2;
}

bool f_family_member(const Multigraph& g, int k) {
  for (const Multigraph& m : f_family(k)) {
    if (isomorphic(g, m)) return true;
  }
  return false;
}

}  // namespace sz5
