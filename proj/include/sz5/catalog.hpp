#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sz5/multigraph.hpp"
#include "sz5/partition.hpp"

namespace sz5 {

/// Named small multigraphs.
///   aK2(a)          two vertices joined by a parallel edges
///   T(a,b,c)        triangle with mu(0,1)=a, mu(0,2)=b, mu(1,2)=c
///   Q(a1..a4)       4-cycle, mu(i, i+1 mod 4) = a_{i+1}
///   W1              vertex 3 joined by triple edges to a single-edge triangle 0,1,2
///   W2              mu(2,3)=3, mu(0,1)=1, the other four pairs 2
///   doubleK4        K4 with every pair doubled
///   Fstar           doubleK4 minus both edges of pair (0,1)
///   path(k)         path with k edges
///   cycle(n,mult)   n-cycle with every edge of multiplicity mult
struct NamedPattern {
  enum class Tag { kAK2, kT, kQ, kW1, kW2, kDoubleK4, kFstar, kPath, kCycle };
  Tag tag = Tag::kAK2;
  std::vector<int> params;

  static NamedPattern ak2(int a) { return {Tag::kAK2, {a}}; }
  static NamedPattern t(int a, int b, int c) { return {Tag::kT, {a, b, c}}; }
  static NamedPattern q(int a1, int a2, int a3, int a4) { return {Tag::kQ, {a1, a2, a3, a4}}; }
  static NamedPattern w1() { return {Tag::kW1, {}}; }
  static NamedPattern w2() { return {Tag::kW2, {}}; }
  static NamedPattern double_k4() { return {Tag::kDoubleK4, {}}; }
  static NamedPattern fstar() { return {Tag::kFstar, {}}; }
  static NamedPattern path(int k) { return {Tag::kPath, {k}}; }
  static NamedPattern cycle(int n, int mult) { return {Tag::kCycle, {n, mult}}; }

  /// Parses "W1", "W2", "2K4", "Fstar", "aK2:4", "T:1,3,3", "Q:2,2,2,2",
  /// "P:3", "C:4,5".
  static NamedPattern parse(const std::string& text);
  std::string to_string() const;
};

Multigraph make_named(const NamedPattern& p);
Multigraph make_cycle(int n, int mult);

/// Members of N5 in the order 2K2, 3K2, T133, T223, W1, W2.
const std::vector<Multigraph>& n5_members();
bool n5_member(const Multigraph& g);

/// Graphs obtained from {2K2, T133, T223, 2K4} by deleting k edges without
/// leaving a T113 subgraph, one per isomorphism class. k must be 1 or 2.
const std::vector<Multigraph>& f_family(int k);
bool f_family_member(const Multigraph& g, int k);

struct ContractibilityResult {
  bool contractible = false;
  /// Lexicographically least failing partition when not contractible.
  std::optional<VertexPartition> witness;
  /// Weight of the witness partition.
  int witness_weight = 0;
  /// True when the witness quotient is in N5 (otherwise its weight is negative).
  bool witness_in_n5 = false;
};

/// Direct check over every partition with at least two parts: weight >= 0
/// and quotient not in N5. Requires a connected graph on >= 2 vertices.
ContractibilityResult is_s5_contractible(const Multigraph& g);

/// Closed-form predicate for n <= 4:
///   n = 2: e >= 4
///   n = 3: e >= 8 and min degree >= 4
///   n = 4: some spanning subgraph has e >= 12, min degree >= 4, mu <= 4
///          and is neither W1 nor W2.
bool small_contractible_closed_form(const Multigraph& g);

}  // namespace sz5
