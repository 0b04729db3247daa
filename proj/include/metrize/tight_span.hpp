#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "metrize/distance_space.hpp"

namespace metrize {

// A function f : X -> [0, inf] with f(x) + f(y) >= d(x, y) for all x, y and
// finite part contained in a single pseudometric component. Values are plain
// doubles; +inf marks the points outside the finite part.
struct AdmissibleFunction {
  std::vector<double> values;

  std::vector<int> finite_part() const;
  bool operator==(const AdmissibleFunction&) const = default;
};

struct AdmissibilityReport {
  bool admissible;
  // Violating pair (x, y) with f(x) + f(y) < d(x, y), or a pair of finite
  // points in different components.
  std::optional<std::pair<int, int>> witness;
};

AdmissibilityReport is_admissible(const DistanceSpace& x, const AdmissibleFunction& f,
                                  double tol = 1e-9);

// The Dress star transform relative to the pseudometric component B of f's
// finite part: f*(v) = sup_{z in B} (d(v, z) - f(z)) on B, inf off B.
// Values may be negative; f* <= f for admissible f. For f == inf everywhere
// the result is inf everywhere.
std::vector<double> star(const DistanceSpace& x, const AdmissibleFunction& f);

// Extends f from its finite part A to the whole component B of the anchor
// (the smallest index of A) by g(v) = f(a) + d(a, v) on B \ A. Functions
// with empty finite part are returned unchanged.
AdmissibleFunction normalize_component(const DistanceSpace& x, const AdmissibleFunction& f);

struct ProjectionResult {
  AdmissibleFunction function;
  double residual;  // final sup-norm gap ||q(f) - f||, a certified extremality gap
  int iterations;
};

// Projects an admissible f onto the extremal functions by iterating
// q(f) = (f + f*) / 2 after normalize_component. The iteration is pointwise
// decreasing and non-expanding; it stops once the sup-residual drops below
// tol. Throws NoConvergence if max_iter is reached first.
ProjectionResult project_extremal(const DistanceSpace& x, const AdmissibleFunction& f,
                                  double tol = 1e-12, int max_iter = 200);

// True iff |f - f*| < tol on the finite component and f = inf off it.
bool is_extremal(const DistanceSpace& x, const AdmissibleFunction& f, double tol = 1e-9);

// The distance function d(x0, .) as a point of the injective envelope.
AdmissibleFunction kuratowski(const DistanceSpace& x, int x0);

// Sup-distance between value tables, with the two-infinities-at-0 convention.
ExtReal sup_distance(std::span<const double> f, std::span<const double> g);

// A random admissible function with finite part in one component: the upper
// envelope of shifted distance functions, clipped to admissibility by one
// star pass. Deterministic in the seed.
AdmissibleFunction random_admissible(const DistanceSpace& x, std::uint64_t seed);

// The Kuratowski image of X augmented with `count` sampled extremal
// functions under the sup-distance. X embeds isometrically; the sampled
// points witness upper bounds for envelope-based distances.
DistanceSpace sample_tight_span(const DistanceSpace& x, int count, std::uint64_t seed);

// Value tables of the sampled points, in the same order as the labels of
// sample_tight_span's result (Kuratowski images first).
std::vector<AdmissibleFunction> sample_tight_span_points(const DistanceSpace& x, int count,
                                                         std::uint64_t seed);

}  // namespace metrize
