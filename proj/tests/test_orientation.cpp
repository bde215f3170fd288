#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"

using fixtures::edge_between;
using fixtures::named;
using sz5::Boundary;
using sz5::Multigraph;
using sz5::Orientation;
using sz5::SearchStatus;

namespace {

Boundary boundary_of(const Multigraph& g, const Orientation& d, int k) {
  std::vector<int> values = sz5::imbalance(g, d);
  return Boundary(k, values);
}

}  // namespace

TEST_CASE("Boundary validation") {
  CHECK_THROWS(Boundary(4, {1, 3}));
  CHECK_THROWS(Boundary(1, {0, 0}));
  CHECK_THROWS(Boundary(5, {1, 1}));
  CHECK(Boundary(5, {7, -2}).values() == std::vector<int>{2, 3});
  CHECK(Boundary::count(5, 4) == 125);
  CHECK(Boundary::from_index(5, 3, 7).values() == std::vector<int>{1, 2, 2});
}

TEST_CASE("verify_beta_orientation") {
  const Multigraph g = named("aK2:5");
  Orientation d{{0, 0, 0, 0, 1}};
  CHECK(sz5::verify_beta_orientation(g, d, Boundary(5, {3, 2})));
  CHECK_FALSE(sz5::verify_beta_orientation(g, d, Boundary(5, {0, 0})));

  std::mt19937_64 rng(31);
  const Multigraph base = fixtures::lift_example();
  for (int i = 0; i < 20; ++i) {
    const Orientation r = fixtures::random_orientation(rng, base);
    CHECK(sz5::verify_beta_orientation(base, r, boundary_of(base, r, 5)));
  }

  const Multigraph k3 = named("aK2:3");
  for (int mask = 0; mask < 8; ++mask) {
    Orientation o;
    for (int e = 0; e < 3; ++e) o.tail.push_back((mask >> e) & 1);
    CHECK_FALSE(sz5::verify_beta_orientation(k3, o, Boundary::zero(5, 2)));
  }
}

TEST_CASE("find_beta_orientation") {
  const Multigraph g = named("aK2:5");
  const auto r = sz5::find_beta_orientation(g, Boundary(5, {3, 2}));
  REQUIRE(r.status == SearchStatus::kFound);
  CHECK(std::count(r.orientation->tail.begin(), r.orientation->tail.end(), 0) == 4);

  CHECK(sz5::find_beta_orientation(named("aK2:3"), Boundary::zero(5, 2)).status == SearchStatus::kNotFound);

  for (int b = 0; b < 5; ++b) {
    const Boundary beta(5, {b, -b});
    const auto s = sz5::find_beta_orientation(named("aK2:4"), beta);
    REQUIRE(s.status == SearchStatus::kFound);
    CHECK(sz5::verify_beta_orientation(named("aK2:4"), *s.orientation, beta));
  }
  CHECK_THROWS(sz5::find_beta_orientation(named("aK2:4"), Boundary::zero(5, 3)));
}

TEST_CASE("budget exhaustion is reported") {
  const Multigraph g = named("C:8,5");
  const auto r = sz5::find_beta_orientation(g, Boundary::from_index(5, 8, 12345), 3);
  CHECK(r.status == SearchStatus::kBudgetExhausted);
  CHECK_FALSE(r.orientation);
}

TEST_CASE("is_strongly_zk") {
  const auto t = sz5::is_strongly_zk(named("T:1,3,3"), 5);
  CHECK_FALSE(t.holds);
  REQUIRE(t.witness);
  CHECK(t.witness->values() == std::vector<int>{1, 1, 3});
  CHECK(oracle::least_witness(named("T:1,3,3"), 5) == std::vector<int>{1, 1, 3});

  // Least failing boundaries, found by brute force over all orientations and frozen.
  for (const char* name : {"W1", "W2"}) {
    const auto w = sz5::is_strongly_zk(named(name), 5);
    CHECK_FALSE(w.holds);
    REQUIRE(w.witness);
    CHECK(w.witness->values() == std::vector<int>{0, 0, 0, 0});
    CHECK(oracle::least_witness(named(name), 5) == std::vector<int>{0, 0, 0, 0});
  }
  CHECK(sz5::is_strongly_zk(named("aK2:4"), 5).holds);
  CHECK(sz5::is_strongly_zk(named("T:2,3,3"), 5).holds);
}

TEST_CASE("mod_orientation") {
  const Multigraph c = named("C:4,5");
  const auto r = sz5::mod_orientation(c, 5);
  REQUIRE(r.status == SearchStatus::kFound);
  CHECK(sz5::verify_beta_orientation(c, *r.orientation, Boundary::zero(5, 4)));
  CHECK(sz5::mod_orientation(named("aK2:3"), 5).status == SearchStatus::kNotFound);
  const auto k4 = sz5::mod_orientation(named("2K4"), 5);
  REQUIRE(k4.status == SearchStatus::kFound);
  CHECK(sz5::verify_beta_orientation(named("2K4"), *k4.orientation, Boundary::zero(5, 4)));
}

TEST_CASE("circular_flow_cert") {
  const Multigraph c = named("C:4,5");
  const auto r = sz5::circular_flow_cert(c, 2);
  REQUIRE(r.cert);
  CHECK(sz5::verify_flow_cert(c, *r.cert));
  for (int x : r.cert->values) CHECK(x == 2);
  CHECK(sz5::circular_flow_cert(named("aK2:3"), 2).status == SearchStatus::kNotFound);
  const auto six = sz5::circular_flow_cert(named("aK2:6"), 2);
  REQUIRE(six.cert);
  CHECK(std::count(six.cert->orientation.tail.begin(), six.cert->orientation.tail.end(), 0) == 3);
}

TEST_CASE("asf_cert") {
  const Multigraph g = named("aK2:4");
  const auto r = sz5::asf_cert(g, Orientation{{0, 0, 0, 0}});
  REQUIRE(r.cert);
  std::vector<int> values = r.cert->values;
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<int>{1, 1, 1, 2});

  const Multigraph c = named("C:4,5");
  const auto cyc = sz5::mod_orientation(c, 5);
  REQUIRE(cyc.orientation);
  const auto cr = sz5::asf_cert(c, *cyc.orientation);
  REQUIRE(cr.cert);
  CHECK(sz5::verify_flow_cert(c, *cr.cert));

  // 3K2 is not SZ5, yet every orientation of it carries an ASF: 2 * imbalance
  // is never 0 mod 5 there and 3K2 reaches every nonzero residue.
  const Multigraph k3 = named("aK2:3");
  for (int mask = 0; mask < 8; ++mask) {
    Orientation o;
    for (int e = 0; e < 3; ++e) o.tail.push_back((mask >> e) & 1);
    const auto a = sz5::asf_cert(k3, o);
    CHECK(a.status == SearchStatus::kFound);
    CHECK(oracle::asf_exists(k3, o.tail));
  }
}

TEST_CASE("extend_through_contraction") {
  // T(4,2,2): the 4K2 pair is {0,1}.
  const Multigraph g = named("T:4,2,2");
  std::vector<sz5::VertexSet> h{{0, 1}};
  const auto q = sz5::contract_sets(g, h);
  const Boundary zero = Boundary::zero(5, 3);
  const auto dq = sz5::mod_orientation(q.graph, 5);
  REQUIRE(dq.orientation);
  const auto r = sz5::extend_through_contraction(g, h, *dq.orientation, zero);
  REQUIRE(r.status == SearchStatus::kFound);
  CHECK(sz5::verify_beta_orientation(g, *r.orientation, zero));

  // Identity contraction.
  const Multigraph base = fixtures::lift_example();
  std::vector<sz5::VertexSet> single{{2}};
  std::mt19937_64 rng(32);
  const Orientation d = fixtures::random_orientation(rng, base);
  const Boundary beta = boundary_of(base, d, 5);
  const auto same = sz5::extend_through_contraction(base, single, d, beta);
  REQUIRE(same.orientation);
  CHECK(*same.orientation == d);
}

TEST_CASE("extend_through_lifting") {
  const Multigraph t = named("T:1,1,3");
  std::vector<sz5::LiftPath> lifts{{{1, 0, 2}, {edge_between(t, 1, 0), edge_between(t, 0, 2)}}};
  const auto lifted = sz5::lift_paths(t, lifts);
  const auto dl = sz5::mod_orientation(lifted.graph, 5);
  REQUIRE(dl.orientation);
  const Orientation d = sz5::extend_through_lifting(t, lifts, *dl.orientation, Boundary::zero(5, 3));
  CHECK(sz5::verify_beta_orientation(t, d, Boundary::zero(5, 3)));
  CHECK(sz5::imbalance(t, d)[0] == 0);

  std::vector<sz5::LiftPath> none;
  const auto plain = sz5::mod_orientation(named("C:4,5"), 5);
  CHECK(sz5::extend_through_lifting(named("C:4,5"), none, *plain.orientation, Boundary::zero(5, 4)) ==
        *plain.orientation);

  const Multigraph c = named("C:6,2");
  std::vector<sz5::LiftPath> two{{{0, 1, 2}, {edge_between(c, 0, 1), edge_between(c, 1, 2)}},
                                 {{3, 4, 5}, {edge_between(c, 3, 4), edge_between(c, 4, 5)}}};
  const auto lc = sz5::lift_paths(c, two);
  std::mt19937_64 rng(33);
  const Orientation dr = fixtures::random_orientation(rng, lc.graph);
  const Boundary beta = boundary_of(lc.graph, dr, 5);
  const Orientation back = sz5::extend_through_lifting(c, two, dr, beta);
  CHECK(sz5::verify_beta_orientation(c, back, beta));
  const auto imb_lifted = sz5::imbalance(lc.graph, dr);
  const auto imb_back = sz5::imbalance(c, back);
  for (int v : {1, 4}) CHECK(imb_back[v] == imb_lifted[v]);
}

TEST_CASE("property: aK2 residue arithmetic") {
  for (int a = 1; a <= 8; ++a) {
    for (int k : {3, 5, 7}) {
      std::set<int> reach;
      for (int x = 0; x <= a; ++x) reach.insert(sz5::mod(2 * x - a, k));
      const bool expected = static_cast<int>(reach.size()) == k;
      CHECK(sz5::is_strongly_zk(named(("aK2:" + std::to_string(a)).c_str()), k).holds == expected);
    }
  }
}

TEST_CASE("property: search, exhaustive enumeration and oracle agree on the corpus") {
  for (const Multigraph& g : fixtures::small_corpus(11, 4)) {
    const auto fast = sz5::is_strongly_zk(g, 5);
    const auto serial = sz5::is_strongly_zk_serial(g, 5);
    const auto full = sz5::is_strongly_zk_exhaustive(g, 5);
    const bool truth = oracle::strongly_zk(g, 5);
    CHECK(fast.holds == truth);
    CHECK(serial.holds == truth);
    CHECK(full.holds == truth);
    CHECK(fast.witness == serial.witness);
    CHECK(full.witness == serial.witness);
    if (fast.holds) CHECK(sz5::tree_packing_number(g).count >= 4);
  }
}

TEST_CASE("property: parallel scan is independent of worker count") {
  for (const char* name : {"W1", "W2", "C:5,5", "T:2,3,3", "Fstar"}) {
    const Multigraph g = named(name);
    const auto base = sz5::is_strongly_zk_serial(g, 5);
    for (int jobs : {1, 2, 4}) {
      const auto r = sz5::is_strongly_zk(g, 5, 0, jobs);
      CHECK(r.holds == base.holds);
      CHECK(r.witness == base.witness);
    }
  }
}

TEST_CASE("property: every returned orientation verifies") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const Multigraph g = fixtures::random_connected(rng, n, 2 + trial % 10, 4);
    const Boundary beta = fixtures::random_boundary(rng, 5, n);
    const auto r = sz5::find_beta_orientation(g, beta);
    if (g.edge_count() <= 16) {
      CHECK((r.status == SearchStatus::kFound) == oracle::has_beta_orientation(g, beta.values(), 5));
    }
    if (r.orientation) CHECK(sz5::verify_beta_orientation(g, *r.orientation, beta));
  }
}

TEST_CASE("property: SZ5 survives edge addition and contraction") {
  for (const Multigraph& g : fixtures::small_corpus(10, 4)) {
    if (!sz5::is_strongly_zk(g, 5).holds) continue;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        Multigraph plus = g;
        plus.add_edge(u, v);
        CHECK(sz5::is_strongly_zk(plus, 5).holds);
        if (g.multiplicity(u, v) > 0 && n > 2) {
          std::vector<int> s{u, v};
          CHECK(sz5::is_strongly_zk(sz5::contract(g, s).graph, 5).holds);
        }
      }
    }
  }
}

TEST_CASE("property: flow certificates") {
  std::mt19937_64 rng(35);
  for (const Multigraph& g : fixtures::small_corpus(9, 4)) {
    const auto circ = sz5::circular_flow_cert(g, 2);
    CHECK((circ.status == SearchStatus::kFound) == (sz5::mod_orientation(g, 5).status == SearchStatus::kFound));
    if (circ.cert) {
      CHECK(sz5::verify_flow_cert(g, *circ.cert));
      const auto imb = sz5::imbalance(g, circ.cert->orientation);
      for (int x : imb) CHECK(sz5::mod(2 * x, 5) == 0);
    }
    const Orientation d = fixtures::random_orientation(rng, g);
    const auto asf = sz5::asf_cert(g, d);
    CHECK((asf.status == SearchStatus::kFound) == oracle::asf_exists(g, d.tail));
    if (asf.cert) {
      CHECK(sz5::verify_flow_cert(g, *asf.cert));
      for (int x : asf.cert->values) CHECK((x == 1 || x == 2));
    }
  }
}
