#include <doctest.h>

#include <cmath>

#include "metrize/examples.hpp"
#include "metrize/hyperspace.hpp"

using namespace metrize;

namespace {
const double kSqrt3 = std::sqrt(3.0);

bool ext_le(ExtReal a, ExtReal b, double tol = 1e-9) {
  if (!b.finite()) return true;
  if (!a.finite()) return false;
  return a.value() <= b.value() + tol;
}
}  // namespace

TEST_CASE("steiner tree") {
  DistanceSpace t = triangle_centroid_space();
  CHECK(steiner_tree(t, std::vector<int>{1}).length == ExtReal(0.0));
  CHECK(ext_close(steiner_tree(t, std::vector<int>{1, 2}).length, 1.0));

  // The three corners connect through the center: 3 / sqrt 3 < 2.
  auto spokes = steiner_tree(t, std::vector<int>{1, 2, 3});
  CHECK(ext_close(spokes.length, kSqrt3));
  CHECK(spokes.edges.size() == 3);
  for (auto [u, v] : spokes.edges) CHECK((u == 0 || v == 0));
}

TEST_CASE("d1 hyperspace") {
  DistanceSpace t = triangle_centroid_space();
  std::vector<int> corners{1, 2, 3};

  auto same = d1_hyperspace(t, corners, corners);
  CHECK(same.value == ExtReal(0.0));

  DistanceSpace two = two_point_space(1.0);
  auto pair = d1_hyperspace(two, std::vector<int>{0}, std::vector<int>{1});
  CHECK(ext_close(pair.value, 1.0));
  REQUIRE(pair.witness.has_value());
  CHECK(pair.witness->edges.size() == 1);

  auto star = d1_hyperspace(t, corners, std::vector<int>{0});
  CHECK(ext_close(star.value, kSqrt3));
  REQUIRE(star.witness.has_value());
  CHECK(star.witness->valid_for(t, corners, std::vector<int>{0}));
  CHECK(ext_close(star.witness->length(t), kSqrt3));

  CHECK(d1_hyperspace(t, std::vector<int>{}, corners).value == ExtReal::infinity());
  CHECK(d1_hyperspace(t, std::vector<int>{}, std::vector<int>{}).value == ExtReal(0.0));
  CHECK(ext_le(hausdorff(t, corners, std::vector<int>{0}), star.value));
}

TEST_CASE("mst upper bound") {
  DistanceSpace t = triangle_centroid_space();
  std::vector<int> corners{1, 2, 3};
  CHECK(d1_upper_mst(t, corners, corners) == ExtReal(0.0));

  DistanceSpace two = two_point_space(1.0);
  CHECK(ext_close(d1_upper_mst(two, std::vector<int>{0}, std::vector<int>{1}), 1.0));

  // Anchored at a single corner, blocks cannot use the center, so the bound
  // is the two-side tree while the exact value routes through the center.
  ExtReal mst = d1_upper_mst(t, corners, std::vector<int>{1});
  CHECK(ext_close(mst, 2.0));
  ExtReal exact = d1_hyperspace(t, corners, std::vector<int>{1}).value;
  CHECK(ext_close(exact, kSqrt3));
  CHECK(exact < mst);
}

TEST_CASE("witness graphs convert to chains") {
  DistanceSpace t = triangle_centroid_space();
  std::vector<int> corners{1, 2, 3}, center{0};
  auto result = d1_hyperspace(t, corners, center);
  auto chain = chain_from_graph(t, corners, center, *result.witness);
  CHECK_FALSE(chain.empty());
  ExtReal cost = 0.0;
  for (const auto& s : chain) cost = cost + lp_tuple_distance(t, s.from, s.to, PNorm::one());
  CHECK(ext_le(cost, result.witness->length(t)));
}
