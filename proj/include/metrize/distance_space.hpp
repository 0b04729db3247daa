#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metrize/ext_real.hpp"
#include "metrize/pnorm.hpp"

namespace metrize {

// First distance-axiom violation found in a matrix, with witness indices.
struct AxiomViolation {
  std::string code;  // NonZeroDiagonal | Asymmetric | TriangleViolation
  std::vector<int> witness;
};

// A finite labeled point set with a validated distance matrix over [0, inf].
// Immutable after construction; pseudometric components are precomputed.
class DistanceSpace {
 public:
  using Matrix = std::vector<std::vector<ExtReal>>;

  // Validates the three distance axioms; throws Error(code, witness) on the
  // first violation. The triangle check runs in O(n^3) with x + inf = inf.
  static DistanceSpace validate(std::vector<std::string> labels, const Matrix& matrix);
  static DistanceSpace validate(const Matrix& matrix);

  // Non-throwing variant of the axiom check.
  static std::optional<AxiomViolation> check(const Matrix& matrix);

  // Trusted constructor for matrices valid by construction (shortest-path
  // tables, product spaces, point clouds). Skips the O(n^3) re-check.
  static DistanceSpace from_trusted(std::vector<std::string> labels,
                                    std::vector<ExtReal> flat);

  int size() const { return static_cast<int>(labels_.size()); }
  ExtReal d(int i, int j) const { return d_[static_cast<std::size_t>(i) * labels_.size() + j]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of the given label, or IndexOutOfRange.
  int index_of(const std::string& label) const;

  // Pseudometric component id of each index; two indices share an id iff
  // their distance is finite.
  const std::vector<int>& component_ids() const { return component_; }
  int component_count() const { return component_count_; }
  std::vector<std::vector<int>> components() const;

  Matrix matrix() const;

 private:
  DistanceSpace() = default;
  void compute_components();

  std::vector<std::string> labels_;
  std::vector<ExtReal> d_;  // row-major size() x size()
  std::vector<int> component_;
  int component_count_ = 0;
};

// diam(A), real diameter and separatedness number of an index set.
struct SetStats {
  ExtReal diam;       // sup of pairwise distances, 0 for |A| <= 1
  ExtReal real_diam;  // sup of finite pairwise distances
  ExtReal sep;        // inf over distinct pairs, inf if none
};

SetStats set_stats(const DistanceSpace& x, std::span<const int> a);

// inf{d(p,q) : p in A, q in B}; 0 when either side is empty.
ExtReal min_cross_distance(const DistanceSpace& x, std::span<const int> a,
                           std::span<const int> b);

// (sum over pseudometric components E of min_cross(A n E, B n E)^p)^(1/p);
// always finite.
ExtReal min_cross_distance_lp(const DistanceSpace& x, std::span<const int> a,
                              std::span<const int> b, PNorm p);

// Hausdorff distance between index sets: max of the two sup-inf terms when
// both are nonempty, 0 when a == b (as sets), inf otherwise.
ExtReal hausdorff(const DistanceSpace& x, std::span<const int> a,
                  std::span<const int> b);

// l^p distance between equal-length index tuples.
ExtReal lp_tuple_distance(const DistanceSpace& x, std::span<const int> f,
                          std::span<const int> g, PNorm p);

// Pairwise Euclidean distances of a point cloud; labels default to p0, p1, ...
DistanceSpace euclidean_import(const std::vector<std::vector<double>>& points,
                               std::vector<std::string> labels = {});

// The restriction of x to an index subset, keeping labels.
DistanceSpace subspace(const DistanceSpace& x, std::span<const int> keep);

}  // namespace metrize
