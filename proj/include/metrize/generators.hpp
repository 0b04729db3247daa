#pragma once

#include <vector>

#include "metrize/distance_space.hpp"
#include "metrize/group_norms.hpp"
#include "metrize/rng.hpp"

namespace metrize {

// Random space from uniform points in a planar square, optionally split into
// two pseudometric components at mutual distance inf. Always a valid
// distance by construction.
DistanceSpace random_space(Rng& rng, int max_size, bool allow_infinite);

// Random index subset of {0..n-1} with at most max_card elements.
std::vector<int> random_subset(Rng& rng, int n, int max_card, bool allow_empty);

std::vector<int> random_tuple(Rng& rng, int n, int len);

// Random residue table over the space; roughly half the entries are zero.
FinSupportFunction random_group_function(Rng& rng, const DistanceSpace& x, int modulus);

// Random element of F0 (total sum zero per component is not enforced).
FinSupportFunction random_zero_sum_function(Rng& rng, const DistanceSpace& x, int modulus);

}  // namespace metrize
