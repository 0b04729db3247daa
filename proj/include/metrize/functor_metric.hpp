#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "metrize/distance_space.hpp"
#include "metrize/functor.hpp"
#include "metrize/pnorm.hpp"

namespace metrize {

// One triple (a_i, f_i, g_i) of a linking chain: the carrier element and the
// two index tuples it is pushed along.
struct ChainStep {
  Element carrier;
  std::vector<int> from;
  std::vector<int> to;
};

struct DistanceResult {
  ExtReal distance;
  // Present iff the distance is finite; empty chain for coinciding elements.
  std::optional<std::vector<ChainStep>> chain;
};

// Exact d^p on FX for a finitary functor of finite degree, computed as a
// shortest path on the graph whose nodes are the elements of FX and whose
// edges join Ff(c) to Fg(c) with weight d^p(f, g), for c in the carrier and
// f, g tuples over X. Very short chains realize the infimum on finite
// spaces, so the reduction is exact. Degree-0 functors have all distinct
// elements at distance inf.
class FunctorMetric {
 public:
  FunctorMetric(const Functor& functor, const DistanceSpace& x, PNorm p,
                std::uint64_t edge_budget = 200'000'000);

  const std::vector<Element>& elements() const { return elements_; }
  int index_of(const Element& a) const;  // throws UnknownElement

  ExtReal distance(const Element& a, const Element& b) const;
  DistanceResult distance_with_chain(const Element& a, const Element& b) const;

  // All-pairs table, symmetric with zero diagonal.
  std::vector<std::vector<ExtReal>> distance_matrix() const;

  // The distance table as a DistanceSpace labeled by canonical forms.
  DistanceSpace as_distance_space() const;

  const DistanceSpace& base_space() const { return x_; }
  PNorm p() const { return p_; }

 private:
  struct Edge {
    int u, v;        // node endpoints, u = F f(c), v = F g(c)
    double w;
    int carrier;     // index into carrier_
    int from, to;    // indices into tuples_
  };

  struct Settled {
    std::vector<double> dist;
    std::vector<int> parent_edge;  // -1 at source / unreached
    std::vector<bool> parent_forward;
  };

  Settled dijkstra(int source) const;
  const std::vector<int>& tuple(int i) const { return tuples_[i]; }

  const Functor& functor_;
  DistanceSpace x_;
  PNorm p_;
  int n_;  // max(1, degree)
  std::vector<Element> carrier_;
  std::vector<std::vector<int>> tuples_;  // X^n in lexicographic order
  std::vector<Element> elements_;         // canonical order
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;  // node -> (edge, other)
};

// The deduplicated element set {Ff(a) : a in carrier, f in X^n}.
std::vector<Element> enumerate_elements(const Functor& functor, const DistanceSpace& x);

// Convenience single-query entry point.
DistanceResult dp_distance(const Functor& functor, const DistanceSpace& x, PNorm p,
                           const Element& a, const Element& b);

// Brute-force minimum of the chain cost over linking chains of at most
// max_len triples, enumerated directly as element-simple step sequences over
// per-carrier move tables (no shortest-path machinery). Exact once
// max_len >= |FX| - 1: loops in a chain can always be cut without raising
// its cost, so element-simple chains realize the infimum. Restricting to
// chains with pairwise-distinct carrier elements instead would be lossy:
// the cheapest route between two doubletons may visit two singletons and
// reuse the two-point carrier on both ends.
ExtReal chain_oracle(const Functor& functor, const DistanceSpace& x, PNorm p,
                     const Element& a, const Element& b, int max_len,
                     std::uint64_t budget = 100'000'000);

// Lipschitz constants (Lip(f), Lip(Ff)) of an index map f : X -> Y and its
// induced map on the metrized functor spaces. Ratios over pairs at finite
// positive distance; 0/0 counts as 0.
std::pair<ExtReal, ExtReal> induced_map_lipschitz(const Functor& functor,
                                                  const DistanceSpace& x,
                                                  const DistanceSpace& y,
                                                  std::span<const int> map, PNorm p);

// Checks that a chain certificate links a to b and that its cost matches.
bool chain_is_valid(const Functor& functor, const DistanceSpace& x, PNorm p,
                    const Element& a, const Element& b,
                    const std::vector<ChainStep>& chain, ExtReal expected_cost,
                    double tol = 1e-9);

}  // namespace metrize
