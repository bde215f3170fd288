#include "sz5/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "sz5/catalog.hpp"
#include "sz5/discharge.hpp"
#include "sz5/mgf.hpp"
#include "sz5/orientation.hpp"
#include "sz5/partition.hpp"
#include "sz5/planar.hpp"
#include "sz5/reducer.hpp"

namespace sz5::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat file, one verdict per line:
//   <canonical hash> <k> <command> <labelled digest> <verdict> [<witness>]
// Later lines win. The witness is only reused for the identically labelled graph.
class VerdictCache {
 public:
  struct Entry {
    std::string digest;
    std::string verdict;
    std::string witness;
  };

  explicit VerdictCache(std::optional<std::string> path) : path_(std::move(path)) {
    if (!path_) return;
    std::ifstream in(*path_);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream row(line);
      std::string hash, command;
      int k = 0;
      Entry e;
      if (!(row >> hash >> k >> command >> e.digest >> e.verdict)) continue;
      row >> e.witness;
      entries_[{hash, k, command}] = e;
    }
  }

  std::optional<Entry> lookup(const std::string& hash, int k, const std::string& command) const {
    auto it = entries_.find({hash, k, command});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void store(const std::string& hash, int k, const std::string& command, const Entry& e) {
    if (!path_) return;
    entries_[{hash, k, command}] = e;
    std::ofstream out(*path_, std::ios::app);
    out << hash << ' ' << k << ' ' << command << ' ' << e.digest << ' ' << e.verdict;
    if (!e.witness.empty()) out << ' ' << e.witness;
    out << '\n';
  }

  bool enabled() const { return path_.has_value(); }

 private:
  std::optional<std::string> path_;
  std::map<std::tuple<std::string, int, std::string>, Entry> entries_;
};

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::vector<int> split_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError(std::string("bad ") + what + " value '" + tok + "'");
    }
  }
  return out;
}

struct Context {
  const Request& req;
  GraphDocument doc;
  json report;
  std::int64_t used = 0;
};

json orientation_json(const Orientation& d) { return json(d.tail); }

SzkResult szk_with_cache(const Multigraph& g, int k, std::int64_t budget, int jobs, VerdictCache& cache,
                         bool* from_cache) {
  *from_cache = false;
  const std::string hash = canonical_hash(g);
  const std::string digest = graph_digest(g);
  if (auto hit = cache.lookup(hash, k, "szk")) {
    SzkResult r;
    r.holds = hit->verdict == "holds";
    if (!r.holds && hit->digest == digest && !hit->witness.empty()) {
      r.witness = Boundary(k, split_ints(hit->witness, "cached witness"));
    }
    *from_cache = true;
    return r;
  }
  SzkResult r = is_strongly_zk(g, k, budget, jobs);
  if (!r.budget_exhausted || r.witness) {
    cache.store(hash, k, "szk",
                {digest, r.holds ? "holds" : "fails", r.witness ? join(r.witness->values()) : std::string()});
  }
  return r;
}

int verdict_exit(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return kHolds;
    case SearchStatus::kNotFound: return kFails;
    case SearchStatus::kBudgetExhausted: return kBudgetExhausted;
  }
  return kInputError;
}

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kNotFound: return "not-found";
    case SearchStatus::kBudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

RotationSystem rotation_for(Context& c) {
  if (c.doc.rotation) return *c.doc.rotation;
  if (!c.doc.graph.is_connected()) throw InputError("graph is disconnected");
  EmbedResult e = embed(c.doc.graph);
  if (!e.rotation) {
    json k = json::array();
    for (auto [u, v] : e.kuratowski) k.push_back({u, v});
    c.report["witness"] = {{"nonplanar", true}, {"kuratowski", k}};
    return {};
  }
  return *e.rotation;
}

json trace_json(const ReductionTrace& t) {
  json j;
  switch (t.kind) {
    case ReductionTrace::Kind::kBase: j["kind"] = "base"; break;
    case ReductionTrace::Kind::kContract: j["kind"] = "contract"; break;
    case ReductionTrace::Kind::kLiftContract: j["kind"] = "lift-contract"; break;
  }
  j["vertices"] = t.graph.vertex_count();
  j["edges"] = t.graph.edge_count();
  if (t.kind == ReductionTrace::Kind::kBase) return j;
  json lifts = json::array();
  for (const LiftStep& s : t.lifts) lifts.push_back({{"path", s.path.vertices}, {"edges", s.path.edges}});
  if (!lifts.empty()) j["lifts"] = lifts;
  j["h"] = t.h;
  json kids = json::array();
  for (const ReductionTrace& ch : t.children) kids.push_back(trace_json(ch));
  j["children"] = kids;
  return j;
}

json finding_json(const std::vector<ForbiddenFinding>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back({{"h", f.h}, {"paths", f.paths}});
  return a;
}

int cmd_weight(Context& c) {
  const WeightResult w = graph_weight(c.doc.graph, c.req.jobs);
  c.report["verdict"] = "computed";
  c.report["certificate"] = {{"weight", w.weight}, {"partition", w.argmin.labels()}};
  return kHolds;
}

int cmd_contractible(Context& c) {
  const ContractibilityResult r = is_s5_contractible(c.doc.graph);
  c.report["verdict"] = r.contractible ? "contractible" : "not-contractible";
  if (!r.contractible) {
    c.report["witness"] = {{"partition", r.witness->labels()},
                           {"weight", r.witness_weight},
                           {"quotient_in_n5", r.witness_in_n5}};
    return kFails;
  }
  return kHolds;
}

int cmd_szk(Context& c, VerdictCache& cache) {
  bool cached = false;
  const SzkResult r = szk_with_cache(c.doc.graph, c.req.k, c.req.budget, c.req.jobs, cache, &cached);
  c.used = r.nodes;
  if (r.witness || (!r.holds && !r.budget_exhausted)) {
    c.report["verdict"] = "fails";
    if (r.witness) c.report["witness"] = {{"beta", r.witness->values()}};
    c.report["certificate"] = {{"cached", cached}};
    return kFails;
  }
  if (r.budget_exhausted) {
    c.report["verdict"] = "budget-exhausted";
    return kBudgetExhausted;
  }
  c.report["verdict"] = "holds";
  c.report["certificate"] = {{"boundaries_checked", r.boundaries_checked}, {"cached", cached}};
  return kHolds;
}

int report_search(Context& c, const SearchResult& r, const Boundary& beta) {
  c.used = r.nodes;
  c.report["verdict"] = status_name(r.status);
  if (r.status == SearchStatus::kFound) {
    c.report["certificate"] = {{"beta", beta.values()}, {"tail", orientation_json(*r.orientation)}};
  } else if (r.status == SearchStatus::kNotFound) {
    c.report["witness"] = {{"beta", beta.values()}, {"reason", "no orientation realizes beta"}};
  }
  return verdict_exit(r.status);
}

int cmd_orient(Context& c) {
  if (!c.req.beta) throw InputError("orient needs --beta");
  const std::vector<int> values = split_ints(*c.req.beta, "--beta");
  if (static_cast<int>(values.size()) != c.doc.graph.vertex_count()) {
    throw InputError("--beta has " + std::to_string(values.size()) + " values for " +
                     std::to_string(c.doc.graph.vertex_count()) + " vertices");
  }
  const Boundary beta(c.req.k, values);
  return report_search(c, find_beta_orientation(c.doc.graph, beta, c.req.budget), beta);
}

int cmd_mod_orient(Context& c) {
  const Boundary beta = Boundary::zero(c.req.k, c.doc.graph.vertex_count());
  return report_search(c, mod_orientation(c.doc.graph, c.req.k, c.req.budget), beta);
}

int report_cert(Context& c, const CertResult& r) {
  c.used = r.nodes;
  c.report["verdict"] = status_name(r.status);
  if (r.cert) {
    c.report["certificate"] = {{"modulus", r.cert->modulus},
                               {"orientation", orientation_json(r.cert->orientation)},
                               {"values", r.cert->values},
                               {"verified", verify_flow_cert(c.doc.graph, *r.cert)}};
  } else if (r.status == SearchStatus::kNotFound) {
    c.report["witness"] = {{"reason", "no certificate exists"}};
  }
  return verdict_exit(r.status);
}

int cmd_circular(Context& c) {
  if (c.req.k < 3 || c.req.k % 2 == 0) throw InputError("circular needs an odd --k >= 3");
  return report_cert(c, circular_flow_cert(c.doc.graph, (c.req.k - 1) / 2, c.req.budget));
}

int cmd_asf(Context& c) {
  return report_cert(c, asf_cert(c.doc.graph, orientation_as_stored(c.doc.graph), c.req.budget));
}

int cmd_reduce(Context& c) {
  const RotationSystem rot = rotation_for(c);
  if (c.report.contains("witness")) {
    c.report["verdict"] = "nonplanar";
    return kFails;
  }
  const ReduceResult r = reduce(c.doc.graph, rot, c.req.budget);
  c.used = r.work;
  c.report["verdict"] = r.status == SearchStatus::kFound ? "reduced" : status_name(r.status);
  if (r.trace) {
    std::string why;
    const bool ok = replay(c.doc.graph, *r.trace, &why);
    c.report["certificate"] = {{"replayed", ok},
                               {"depth", r.trace->depth()},
                               {"nodes", r.trace->node_count()},
                               {"trace", trace_json(*r.trace)}};
    if (!ok) {
      c.report["witness"] = {{"replay_failure", why}};
      return kFails;
    }
  } else if (r.status == SearchStatus::kNotFound) {
    c.report["witness"] = {{"reason", r.message}};
  }
  return verdict_exit(r.status);
}

int cmd_discharge(Context& c) {
  const RotationSystem rot = rotation_for(c);
  if (c.report.contains("witness")) {
    c.report["verdict"] = "nonplanar";
    return kFails;
  }
  const DischargeTranscript t = discharge(c.doc.graph, rot);
  json faces = json::array();
  for (std::size_t f = 0; f < t.degrees.size(); ++f) {
    faces.push_back({{"degree", t.degrees[f]},
                     {"ch0", t.ch0[f].to_string()},
                     {"ch1", t.ch1[f].to_string()},
                     {"ch2", t.ch2[f].to_string()}});
  }
  json transfers = json::array();
  for (const Transfer& x : t.transfers) {
    transfers.push_back({{"rule", x.rule}, {"from", x.from}, {"to", x.to}, {"amount", x.amount.to_string()}});
  }
  c.report["verdict"] = t.negative.empty() ? "nonnegative" : "negative-faces";
  c.report["certificate"] = {{"total0", t.total0().to_string()},
                             {"total1", t.total1().to_string()},
                             {"total2", t.total2().to_string()},
                             {"faces", faces},
                             {"transfers", transfers},
                             {"negative", t.negative},
                             {"t1_candidates", t.t1_candidates}};
  return kHolds;
}

int cmd_scan(Context& c) {
  const ForbiddenReport f = forbidden_scan(c.doc.graph);
  json w;
  if (!f.t113.empty()) w["t113"] = finding_json(f.t113);
  if (!f.t222_two_paths.empty()) w["t222_two_paths"] = finding_json(f.t222_two_paths);
  if (!f.q2333_short_path.empty()) w["q2333_short_path"] = finding_json(f.q2333_short_path);
  if (!f.q2233_paths.empty()) w["q2233_paths"] = finding_json(f.q2233_paths);
  if (!f.q2223_triple.empty()) w["q2223_triple"] = finding_json(f.q2223_triple);
  bool clean = f.empty();
  if (c.doc.graph.is_connected() && c.doc.graph.vertex_count() >= 2) {
    const RotationSystem rot = rotation_for(c);
    if (!c.report.contains("witness")) {
      json faces = json::array();
      for (const FaceViolation& v : face_config_scan(c.doc.graph, rot)) {
        faces.push_back({{"face", v.face}, {"condition", v.condition}, {"detail", v.detail}});
      }
      if (!faces.empty()) {
        w["faces"] = faces;
        clean = false;
      }
    } else {
      c.report.erase("witness");
      c.report["certificate"] = {{"faces_checked", false}};
    }
  }
  c.report["verdict"] = clean ? "clean" : "found";
  if (!clean) c.report["witness"] = w;
  return clean ? kHolds : kFails;
}

int cmd_trees(Context& c) {
  const TreePacking t = tree_packing_number(c.doc.graph);
  c.report["verdict"] = "computed";
  c.report["certificate"] = {{"count", t.count}, {"trees", t.trees}};
  return kHolds;
}

int cmd_enumerate4v(Context& c, VerdictCache& cache) {
  EnumerationBounds b;
  b.vertex_count = 4;
  b.min_edges = c.req.min_edges;
  b.max_edges = c.req.max_edges;
  b.mu_max = c.req.mu_max;
  b.connected = true;
  const std::vector<Multigraph> all = enumerate_class(b, c.req.jobs);
  const Multigraph w1 = make_named(NamedPattern::w1());
  const Multigraph w2 = make_named(NamedPattern::w2());
  int candidates = 0;
  json failing = json::array();
  json open = json::array();
  for (const Multigraph& g : all) {
    if (tree_packing_number(g).count < 4) continue;
    ++candidates;
    bool cached = false;
    const SzkResult r = szk_with_cache(g, c.req.k, c.req.budget, c.req.jobs, cache, &cached);
    c.used += r.nodes;
    if (r.holds) continue;
    std::string name = isomorphic(g, w1) ? "W1" : isomorphic(g, w2) ? "W2" : "";
    json entry = {{"name", name}, {"edges", g.edge_count()}, {"multiplicities", g.multiplicity_vector()},
                  {"hash", canonical_hash(g)}};
    if (r.witness) entry["beta"] = r.witness->values();
    (r.witness || !r.budget_exhausted ? failing : open).push_back(entry);
  }
  c.report["verdict"] = open.empty() ? "complete" : "budget-exhausted";
  c.report["witness"] = {{"non_szk", failing}};
  c.report["certificate"] = {{"enumerated", all.size()}, {"tree_packing_ge_4", candidates}};
  if (!open.empty()) {
    c.report["witness"]["undecided"] = open;
    return kBudgetExhausted;
  }
  return kHolds;
}

std::string render_text(const json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return out.str();
}

}  // namespace

Report run(const Request& req) {
  Context c{req, {}, json::object(), 0};
  c.report["command"] = req.command;
  c.report["input_hash"] = nullptr;
  c.report["verdict"] = nullptr;
  int code = kInputError;
  try {
    if (req.format != "json" && req.format != "text") throw InputError("--format must be json or text");
    if (req.jobs < 0) throw InputError("--jobs must be >= 0");
    VerdictCache cache(req.cache);
    if (req.command == "enumerate4v") {
      code = cmd_enumerate4v(c, cache);
    } else {
      if (req.named) {
        c.doc.graph = make_named(NamedPattern::parse(*req.named));
        c.doc.name = *req.named;
      } else {
        c.doc = parse_graph(req.input);
      }
      c.report["input_hash"] = canonical_hash(c.doc.graph);
      const std::string& cmd = req.command;
      if (cmd == "weight") code = cmd_weight(c);
      else if (cmd == "contractible") code = cmd_contractible(c);
      else if (cmd == "szk") code = cmd_szk(c, cache);
      else if (cmd == "orient") code = cmd_orient(c);
      else if (cmd == "mod-orient") code = cmd_mod_orient(c);
      else if (cmd == "circular") code = cmd_circular(c);
      else if (cmd == "asf") code = cmd_asf(c);
      else if (cmd == "reduce") code = cmd_reduce(c);
      else if (cmd == "discharge") code = cmd_discharge(c);
      else if (cmd == "scan") code = cmd_scan(c);
      else if (cmd == "trees") code = cmd_trees(c);
      else throw InputError("unknown command '" + cmd + "'");
    }
  } catch (const std::exception& e) {
    // GraphError, ParseError and Boundary validation all land here.
    c.report["verdict"] = "input-error";
    c.report["error"] = e.what();
    code = kInputError;
  }
  c.report["budget_used"] = c.used;
  Report out;
  out.exit_code = code;
  out.output = req.format == "text" ? render_text(c.report) : c.report.dump(2) + "\n";
  return out;
}

}  // namespace sz5::cli
