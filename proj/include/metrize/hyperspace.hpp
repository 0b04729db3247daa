#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "metrize/distance_space.hpp"
#include "metrize/functor_metric.hpp"

namespace metrize {

// A graph in the space witnessing a d^1 hyperspace distance: every connected
// component meets both defining sets. Edges are unordered index pairs;
// length is the sum of edge distances.
struct SpanningGraph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;

  ExtReal length(const DistanceSpace& x) const;
  // Checks a u b <= V, edge endpoints in V, and that every component of the
  // graph intersects both a and b.
  bool valid_for(const DistanceSpace& x, std::span<const int> a, std::span<const int> b) const;
};

struct SteinerResult {
  ExtReal length;
  std::vector<std::pair<int, int>> edges;
};

// Exact minimum-length tree in the complete graph on X spanning the given
// terminals (Dreyfus-Wagner dynamic program; Steiner vertices range over all
// of X). Terminals in different pseudometric components give inf.
SteinerResult steiner_tree(const DistanceSpace& x, std::span<const int> terminals);

struct HyperD1Result {
  ExtReal value;
  std::optional<SpanningGraph> witness;
};

// d^1 on the full hyperspace: the minimum total length over partitions of
// a u b into blocks meeting both sides, each block spanned by an exact
// Steiner tree. 0 for a == b, inf if exactly one side is empty.
HyperD1Result d1_hyperspace(const DistanceSpace& x, std::span<const int> a,
                            std::span<const int> b);

// Upper bound: same partition minimization with blocks spanned by minimum
// spanning trees on their own vertices (no Steiner vertices).
ExtReal d1_upper_mst(const DistanceSpace& x, std::span<const int> a, std::span<const int> b);

// Converts a witness graph into a linking chain for the hyperspace functor
// with chain cost <= the graph length (pendant-peeling construction). Chain
// elements are full-domain sets, serialized as ChainSteps.
std::vector<ChainStep> chain_from_graph(const DistanceSpace& x, std::vector<int> a,
                                        std::vector<int> b, SpanningGraph graph);

}  // namespace metrize
