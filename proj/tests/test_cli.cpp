#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "sz5/cli.hpp"
#include "sz5/mgf.hpp"

using fixtures::named;
using json = nlohmann::json;
using sz5::cli::Request;

namespace {

std::string document(const sz5::Multigraph& g) {
  sz5::GraphDocument d;
  d.graph = g;
  return sz5::serialize_graph(d);
}

json run_json(Request r, int expected_exit) {
  const auto out = sz5::cli::run(r);
  CHECK(out.exit_code == expected_exit);
  const json j = json::parse(out.output);
  for (const char* key : {"command", "input_hash", "verdict", "budget_used"}) CHECK(j.contains(key));
  return j;
}

}  // namespace

TEST_CASE("parse_graph") {
  std::string text = "mgf 2 5\n";
  for (int i = 0; i < 5; ++i) text += "0 1\n";
  const auto d = sz5::parse_graph(text);
  CHECK(d.graph == named("aK2:5"));
  CHECK_FALSE(d.rotation);

  const std::string w1 =
      "# name: W1\n# source: hand entered\nmgf 4 12\n0 1\n0 2\n1 2\n0 3\n0 3\n0 3\n1 3\n1 3\n1 3\n2 3\n2 3\n2 3\n";
  const auto dw = sz5::parse_graph(w1);
  auto deg = dw.graph.degrees();
  std::sort(deg.begin(), deg.end());
  CHECK(deg == std::vector<int>{5, 5, 5, 9});
  CHECK(dw.name == "W1");
  CHECK(dw.source == "hand entered");

  try {
    sz5::parse_graph("mgf 2 2\n0 1\n0 0\n");
    FAIL("loop accepted");
  } catch (const sz5::ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("loop") != std::string::npos);
  }
  CHECK_THROWS_AS(sz5::parse_graph("graph 2 1\n0 1\n"), sz5::ParseError);
  CHECK_THROWS_AS(sz5::parse_graph("mgf 2 2\n0 1\n"), sz5::ParseError);
  CHECK_THROWS_AS(sz5::parse_graph("mgf 2 1\n0 5\n"), sz5::ParseError);
  CHECK_THROWS_AS(sz5::parse_graph("mgf 2 1\n0 1 7\n"), sz5::ParseError);
  CHECK_THROWS_AS(sz5::parse_graph("mgf 2 1\n0 1\nextra\n"), sz5::ParseError);
  CHECK_THROWS_AS(sz5::parse_graph("mgf 2 2\n0 1\n0 1\n\nrot\n0: 0 1\n1: 0\n"), sz5::ParseError);
}

TEST_CASE("serialize and parse round-trip") {
  sz5::GraphDocument d;
  d.graph = fixtures::two_path_plane();
  d.rotation = fixtures::two_path_plane_rotation();
  d.name = "two_path_plane";
  const std::string once = sz5::serialize_graph(d);
  const auto back = sz5::parse_graph(once);
  CHECK(back.graph == d.graph);
  CHECK(back.rotation == d.rotation);
  CHECK(sz5::serialize_graph(back) == once);
  for (const char* name : {"W1", "W2", "C:5,3", "Fstar"}) {
    const std::string s = document(named(name));
    CHECK(sz5::serialize_graph(sz5::parse_graph(s)) == s);
  }
}

TEST_CASE("cli szk, orient and input errors") {
  Request r;
  r.command = "szk";
  r.input = document(named("aK2:4"));
  CHECK(run_json(r, 0)["verdict"] == "holds");

  r.command = "orient";
  r.input = document(named("aK2:3"));
  r.beta = "0,0";
  const json j = run_json(r, 1);
  CHECK(j["verdict"] == "not-found");
  CHECK(j.contains("witness"));

  r.beta = "1,1";
  CHECK(run_json(r, 3)["verdict"] == "input-error");
  r.beta = "1,2,2";
  CHECK(run_json(r, 3)["verdict"] == "input-error");
  r.beta = "1,x";
  CHECK(run_json(r, 3)["verdict"] == "input-error");

  r.command = "orient";
  r.input = document(named("aK2:5"));
  r.beta = "3,2";
  const json found = run_json(r, 0);
  CHECK(found["certificate"]["tail"].size() == 5);

  r.command = "nonsense";
  CHECK(run_json(r, 3)["verdict"] == "input-error");
  r.command = "szk";
  r.input = "mgf 2 1\n0 0\n";
  CHECK(run_json(r, 3)["error"].get<std::string>().find("line 2") != std::string::npos);
}

TEST_CASE("cli budget exhaustion") {
  Request r;
  r.command = "orient";
  r.named = "C:8,5";
  r.beta = "1,2,3,4,0,0,0,0";
  r.budget = 2;
  CHECK(run_json(r, 2)["verdict"] == "budget-exhausted");
}

TEST_CASE("cli commands on catalog graphs") {
  Request r;
  r.named = "W1";
  r.command = "weight";
  CHECK(run_json(r, 0)["certificate"]["weight"] == 0);
  r.command = "contractible";
  CHECK(run_json(r, 1)["witness"]["quotient_in_n5"] == true);
  r.command = "scan";
  CHECK(run_json(r, 1)["witness"]["t113"].size() == 3);
  r.command = "trees";
  CHECK(run_json(r, 0)["certificate"]["count"] == 4);
  r.command = "discharge";
  CHECK(run_json(r, 0)["certificate"]["total0"] == "-1");
  r.command = "szk";
  CHECK(run_json(r, 1)["witness"]["beta"] == json::array({0, 0, 0, 0}));

  r.named = "C:5,5";
  r.command = "reduce";
  const json red = run_json(r, 0);
  CHECK(red["certificate"]["replayed"] == true);
  CHECK(red["certificate"]["trace"]["kind"] == "contract");
  r.command = "mod-orient";
  CHECK(run_json(r, 0)["verdict"] == "found");
  r.command = "circular";
  CHECK(run_json(r, 0)["certificate"]["verified"] == true);
  r.command = "asf";
  CHECK(run_json(r, 0)["certificate"]["verified"] == true);
  r.command = "scan";
  CHECK(run_json(r, 0)["verdict"] == "clean");

  r.named = "aK2:3";
  r.command = "circular";
  CHECK(run_json(r, 1)["verdict"] == "not-found");

  r.named = "2K4";
  r.command = "contractible";
  r.format = "text";
  const auto text = sz5::cli::run(r);
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("verdict: contractible") != std::string::npos);
}

TEST_CASE("cli enumerate4v") {
  Request r;
  r.command = "enumerate4v";
  r.min_edges = 12;
  r.max_edges = 13;
  r.mu_max = 4;
  const std::string raw = sz5::cli::run(r).output;
  const json j = run_json(r, 0);
  const auto& bad = j["witness"]["non_szk"];
  REQUIRE(bad.size() == 2);
  CHECK(bad[0]["name"] == "W1");
  CHECK(bad[1]["name"] == "W2");
  for (const auto& g : bad) CHECK(g["edges"] == 12);
  for (int jobs : {1, 2, 4}) {
    r.jobs = jobs;
    CHECK(sz5::cli::run(r).output == raw);
  }
}

TEST_CASE("cli verdict cache") {
  const auto path = std::filesystem::temp_directory_path() / "sz5_cli_cache_test.txt";
  std::filesystem::remove(path);
  Request r;
  r.command = "szk";
  r.named = "W2";
  r.cache = path.string();
  const json first = run_json(r, 1);
  CHECK(first["certificate"]["cached"] == false);
  const json second = run_json(r, 1);
  CHECK(second["certificate"]["cached"] == true);
  CHECK(second["witness"] == first["witness"]);
  CHECK(second["input_hash"] == first["input_hash"]);

  // A relabelled copy hits the same entry but does not reuse the labelled witness.
  sz5::Multigraph w2 = named("W2");
  sz5::Multigraph flipped(4);
  for (const sz5::Edge& e : w2.edges()) flipped.add_edge(3 - e.a, 3 - e.b);
  r.named.reset();
  r.input = document(flipped);
  const json third = run_json(r, 1);
  CHECK(third["certificate"]["cached"] == true);
  CHECK(third["input_hash"] == first["input_hash"]);

  // A different graph never takes a cached verdict.
  r.input = document(named("aK2:4"));
  CHECK(run_json(r, 0)["certificate"]["cached"] == false);

  std::ifstream in(path);
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 2);
  std::filesystem::remove(path);
}
