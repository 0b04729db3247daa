#pragma once

#include <optional>
#include <vector>

#include "metrize/distance_space.hpp"

namespace metrize {

// A finitely supported function X -> Z_m, stored as residues per index.
struct FinSupportFunction {
  int modulus = 2;  // m >= 2
  std::vector<int> values;

  static FinSupportFunction zero(int modulus, int size);
  FinSupportFunction normalized() const;  // residues reduced into [0, m)

  std::vector<int> support() const;
  friend FinSupportFunction operator+(const FinSupportFunction&, const FinSupportFunction&);
  friend FinSupportFunction operator-(const FinSupportFunction&, const FinSupportFunction&);
  bool operator==(const FinSupportFunction&) const = default;
};

struct MembershipReport {
  bool in_f0;   // total sum 0 in Z_m
  bool in_f00;  // every pseudometric-component sum 0
};

MembershipReport classify(const DistanceSpace& x, const FinSupportFunction& phi);

// One dipole move g * (delta_plus - delta_minus).
struct Dipole {
  int g;
  int plus;
  int minus;
};

struct GroupDistResult {
  ExtReal value;
  // A representing sequence of a - b; present iff the distance is finite.
  std::optional<std::vector<Dipole>> moves;
};

// d^1 on F(X, Z_m): shortest path in the state graph where each move adds
// g * (delta_x - delta_y) at cost d(x, y). Infinite iff a - b has a nonzero
// component sum. States are expanded lazily; m^|X| is the hard ceiling.
GroupDistResult d1_group(const DistanceSpace& x, const FinSupportFunction& a,
                         const FinSupportFunction& b);

// The restricted norm: moves and intermediate states confined to supp(phi).
ExtReal norm_restricted(const DistanceSpace& x, const FinSupportFunction& phi);

struct MatchingResult {
  ExtReal value;
  std::vector<std::pair<int, int>> pairs;
};

// Boolean (m = 2) norm via exact minimum-weight perfect matching on the
// support (subset dynamic program). OddSupport if phi is not in F0.
MatchingResult boolean_matching_norm(const DistanceSpace& x, const FinSupportFunction& phi);

// Word-norm distance generated by single-generator dipoles only.
// NotAGenerator unless gcd(g, m) = 1.
ExtReal graev_distance(const DistanceSpace& x, const FinSupportFunction& a,
                       const FinSupportFunction& b, int g);

// The value of the envelope-based distance for every p > 1: 0 if a - b lies
// in F00, inf otherwise. Requires a, b in F0.
ExtReal pcheck_distance(const DistanceSpace& x, const FinSupportFunction& a,
                        const FinSupportFunction& b);

}  // namespace metrize
