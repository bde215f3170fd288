#include <set>

#include "sz5/orientation.hpp"

namespace sz5 {

bool verify_flow_cert(const Multigraph& g, const ModularFlowCert& cert) {
  const int k = cert.modulus;
  if (k < 2) return false;
  if (static_cast<int>(cert.values.size()) != g.edge_count()) return false;
  if (static_cast<int>(cert.orientation.tail.size()) != g.edge_count()) return false;
  std::vector<std::int64_t> net(g.vertex_count(), 0);
  std::set<int> used;
  for (const Edge& e : g.edges()) {
    const Vertex t = cert.orientation.tail[e.id];
    if (t != e.a && t != e.b) return false;
    const int x = cert.values[e.id];
    if (x <= 0 || x >= k) return false;
    used.insert(x);
    net[t] += x;
    net[e.other(t)] -= x;
  }
  for (std::int64_t x : net) {
    if (mod(x, k) != 0) return false;
  }
  if (cert.kind == ModularFlowCert::Kind::kCircular) {
    if (cert.p != k) return false;
    for (int x : used) {
      if (x < cert.q || x > cert.p - cert.q) return false;
    }
  } else {
    for (int x : used) {
      if (used.count(mod(-x, k))) return false;
    }
  }
  return true;
}

CertResult circular_flow_cert(const Multigraph& g, int t, std::int64_t budget) {
  if (t < 1) throw GraphError("circular certificate needs t >= 1");
  const int p = 2 * t + 1;
  const SearchResult r = mod_orientation(g, p, budget);
  CertResult out;
  out.status = r.status;
  out.nodes = r.nodes;
  if (r.status != SearchStatus::kFound) return out;
  ModularFlowCert cert;
  cert.kind = ModularFlowCert::Kind::kCircular;
  cert.modulus = p;
  cert.p = p;
  cert.q = t;
  cert.orientation = *r.orientation;
  cert.values.assign(g.edge_count(), t);
  if (!verify_flow_cert(g, cert)) throw std::logic_error("circular certificate failed verification");
  out.cert = std::move(cert);
  return out;
}

CertResult asf_cert(const Multigraph& g, const Orientation& d, std::int64_t budget) {
  constexpr int k = 5;
  const auto imb = imbalance(g, d);
  std::vector<int> beta(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) beta[v] = mod(2 * imb[v], k);
  const SearchResult r = find_beta_orientation(g, Boundary(k, beta), budget);
  CertResult out;
  out.status = r.status;
  out.nodes = r.nodes;
  if (r.status != SearchStatus::kFound) return out;
  ModularFlowCert cert;
  cert.kind = ModularFlowCert::Kind::kAntisymmetric;
  cert.modulus = k;
  cert.orientation = d;
  cert.values.resize(g.edge_count());
  for (const Edge& e : g.edges()) cert.values[e.id] = r.orientation->tail[e.id] == d.tail[e.id] ? 2 : 1;
  if (!verify_flow_cert(g, cert)) throw std::logic_error("antisymmetric certificate failed verification");
  out.cert = std::move(cert);
  return out;
}

}  // namespace sz5
