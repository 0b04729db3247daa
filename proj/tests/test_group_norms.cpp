#include <doctest.h>

#include <cmath>

#include "metrize/error.hpp"
#include "metrize/examples.hpp"
#include "metrize/group_norms.hpp"

using namespace metrize;

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TEST_CASE("membership classification") {
  DistanceSpace t = triangle_centroid_space();
  FinSupportFunction zero = FinSupportFunction::zero(3, 4);
  auto r = classify(t, zero);
  CHECK(r.in_f0);
  CHECK(r.in_f00);

  FinSupportFunction ones{3, {0, 1, 1, 1}};
  r = classify(t, ones);
  CHECK(r.in_f0);
  CHECK(r.in_f00);

  DistanceSpace one = euclidean_import({{0.0}});
  FinSupportFunction spike{2, {1}};
  r = classify(one, spike);
  CHECK_FALSE(r.in_f0);
  CHECK_FALSE(r.in_f00);
}

TEST_CASE("d1 group distance") {
  DistanceSpace two = two_point_space(1.0);
  FinSupportFunction a{2, {1, 1}}, zero2 = FinSupportFunction::zero(2, 2);
  CHECK(d1_group(two, a, a).value == ExtReal(0.0));
  auto r = d1_group(two, a, zero2);
  CHECK(ext_close(r.value, 1.0));
  REQUIRE(r.moves.has_value());
  CHECK(r.moves->size() == 1);

  DistanceSpace t = triangle_centroid_space();
  FinSupportFunction corners{3, {0, 1, 1, 1}}, zero3 = FinSupportFunction::zero(3, 4);
  CHECK(ext_close(d1_group(t, corners, zero3).value, kSqrt3));
  CHECK(ext_close(norm_restricted(t, corners), 2.0));
}

TEST_CASE("restricted norm equals d1 for modulus 2") {
  DistanceSpace t = triangle_centroid_space();
  FinSupportFunction zero = FinSupportFunction::zero(2, 4);
  CHECK(norm_restricted(t, zero) == ExtReal(0.0));
  FinSupportFunction pair{2, {0, 1, 1, 0}};
  CHECK(ext_close(norm_restricted(t, pair), d1_group(t, pair, zero).value));
}

TEST_CASE("boolean matching norm") {
  DistanceSpace square = euclidean_import({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
  FinSupportFunction zero = FinSupportFunction::zero(2, 4);
  auto none = boolean_matching_norm(square, zero);
  CHECK(none.value == ExtReal(0.0));
  CHECK(none.pairs.empty());

  FinSupportFunction all{2, {1, 1, 1, 1}};
  auto matched = boolean_matching_norm(square, all);
  CHECK(ext_close(matched.value, 2.0));
  CHECK(matched.pairs.size() == 2);

  DistanceSpace two = two_point_space(1.0);
  FinSupportFunction both{2, {1, 1}};
  CHECK(ext_close(boolean_matching_norm(two, both).value, 1.0));

  FinSupportFunction odd{2, {1, 0}};
  CHECK_THROWS_AS(boolean_matching_norm(two, odd), Error);
}

TEST_CASE("graev distance") {
  DistanceSpace two = two_point_space(1.0);
  FinSupportFunction a{4, {2, 0}}, b{4, {0, 2}};
  CHECK(graev_distance(two, a, a, 1) == ExtReal(0.0));
  CHECK(ext_close(graev_distance(two, a, b, 1), 2.0));
  CHECK(ext_close(d1_group(two, a, b).value, 1.0));
  CHECK_THROWS_AS(graev_distance(two, a, b, 2), Error);
}

TEST_CASE("p > 1 classification") {
  DistanceSpace two = two_point_space(1.0);
  FinSupportFunction a{2, {1, 1}}, zero = FinSupportFunction::zero(2, 2);
  CHECK(pcheck_distance(two, a, a) == ExtReal(0.0));
  CHECK(pcheck_distance(two, a, zero) == ExtReal(0.0));

  DistanceSpace::Matrix split = {{0.0, ExtReal::infinity()}, {ExtReal::infinity(), 0.0}};
  DistanceSpace apart = DistanceSpace::validate(split);
  CHECK(pcheck_distance(apart, a, zero) == ExtReal::infinity());

  FinSupportFunction bad{2, {1, 0}};
  CHECK_THROWS_AS(pcheck_distance(two, bad, zero), Error);
}
