#pragma once

#include <string>
#include <vector>

#include "metrize/distance_space.hpp"

namespace metrize {

// The four-point rectangle {(+-5, +-sqrt 3)}: left pair a, right pair b.
DistanceSpace rectangle_space();
// The rectangle extended by the two midpoints (-4, 0) and (4, 0).
DistanceSpace rectangle_extended_space();
// Unit equilateral triangle with its center; index 0 is the center.
DistanceSpace triangle_centroid_space();
// Two points at the given distance.
DistanceSpace two_point_space(double d);

struct ExampleRow {
  std::string name;
  double expected;
  double actual;
  double tolerance;
  bool pass;
};

// Runs the four reference computations end to end and compares against the
// recorded values. Failures are report content, not errors.
std::vector<ExampleRow> reproduce_examples();

}  // namespace metrize
