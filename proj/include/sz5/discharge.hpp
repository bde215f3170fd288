#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sz5/planar.hpp"

namespace sz5 {

/// Exact charge in units of 1/8.
class Charge {
 public:
  constexpr Charge() = default;
  static constexpr Charge eighths(std::int64_t x) { return Charge(x); }
  static constexpr Charge whole(std::int64_t x) { return Charge(8 * x); }

  constexpr std::int64_t in_eighths() const { return e_; }
  constexpr Charge operator+(Charge o) const { return Charge(e_ + o.e_); }
  constexpr Charge operator-(Charge o) const { return Charge(e_ - o.e_); }
  constexpr Charge operator-() const { return Charge(-e_); }
  constexpr Charge& operator+=(Charge o) { e_ += o.e_; return *this; }
  constexpr Charge& operator-=(Charge o) { e_ -= o.e_; return *this; }
  constexpr auto operator<=>(const Charge&) const = default;

  /// Reduced fraction, e.g. "-5/2", "0", "3".
  std::string to_string() const;

 private:
  constexpr explicit Charge(std::int64_t e) : e_(e) {}
  std::int64_t e_ = 0;
};

inline constexpr Charge kQuarter = Charge::eighths(2);
inline constexpr Charge kEighth = Charge::eighths(1);

struct Transfer {
  std::string rule;  ///< "R1", "R2.1", "R2.2" or "R2.3"
  int from = 0;
  int to = 0;
  Charge amount;
  int chain = 0;     ///< index into the weak adjacency list
};

struct DischargeTranscript {
  std::vector<int> degrees;
  std::vector<Charge> ch0, ch1, ch2;
  std::vector<Transfer> transfers;
  std::vector<WeakAdjacency> chains;
  /// Faces with ch2 < 0.
  std::vector<int> negative;
  /// Chains with t = 1 whose faces would trigger some R2 rule if ordinary
  /// adjacency counted as "via 2K2". Listed for review, never applied.
  std::vector<int> t1_candidates;

  Charge total0() const;
  Charge total1() const;
  Charge total2() const;
};

/// ch0(f) = d(f) - 5/2; R1 then R2 computed from the face structure.
DischargeTranscript discharge(const Multigraph& g, const RotationSystem& rot);

struct FaceViolation {
  int face = 0;
  int condition = 0;  ///< 1..4
  std::string detail;
};

/// Checks the four face conditions on H_f = G[V(f)] and reports violations.
std::vector<FaceViolation> face_config_scan(const Multigraph& g, const RotationSystem& rot);

}  // namespace sz5
