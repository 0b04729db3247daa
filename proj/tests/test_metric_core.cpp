#include <doctest.h>

#include <cmath>

#include "metrize/distance_space.hpp"
#include "metrize/error.hpp"
#include "metrize/examples.hpp"
#include "metrize/json_io.hpp"

using namespace metrize;

namespace {
const ExtReal kInf = ExtReal::infinity();
}

TEST_CASE("ext real arithmetic conventions") {
  CHECK(ExtReal(2.0) + kInf == kInf);
  CHECK(kInf + kInf == kInf);
  CHECK(kInf * ExtReal(0.0) == ExtReal(0.0));
  CHECK(ExtReal(0.0) * kInf == ExtReal(0.0));
  CHECK(ExtReal(2.0) * kInf == kInf);
  CHECK(ExtReal(3.0) < kInf);
  CHECK_THROWS_AS(ExtReal(-1.0), Error);
}

TEST_CASE("validate accepts and rejects per axiom") {
  CHECK(DistanceSpace::validate({{ExtReal(0.0)}}).size() == 1);

  DistanceSpace::Matrix asym = {{0.0, 1.0}, {2.0, 0.0}};
  auto bad = DistanceSpace::check(asym);
  REQUIRE(bad.has_value());
  CHECK(bad->code == "Asymmetric");
  CHECK(bad->witness == std::vector<int>{0, 1});

  DistanceSpace::Matrix triangle = {{0.0, 1.0, 3.0}, {1.0, 0.0, 1.0}, {3.0, 1.0, 0.0}};
  bad = DistanceSpace::check(triangle);
  REQUIRE(bad.has_value());
  CHECK(bad->code == "TriangleViolation");
  CHECK(bad->witness == std::vector<int>{0, 2, 1});
  CHECK_THROWS_AS(DistanceSpace::validate(triangle), Error);

  DistanceSpace::Matrix diag = {{1.0}};
  bad = DistanceSpace::check(diag);
  REQUIRE(bad.has_value());
  CHECK(bad->code == "NonZeroDiagonal");
}

TEST_CASE("infinite entries never break the triangle check") {
  DistanceSpace::Matrix m = {{0.0, 1.0, kInf}, {1.0, 0.0, kInf}, {kInf, kInf, 0.0}};
  CHECK_FALSE(DistanceSpace::check(m).has_value());
}

TEST_CASE("pseudometric components") {
  DistanceSpace one = euclidean_import({{0.0}, {1.0}, {2.0}});
  CHECK(one.component_count() == 1);

  DistanceSpace::Matrix split = {{0.0, kInf}, {kInf, 0.0}};
  DistanceSpace two = DistanceSpace::validate(split);
  CHECK(two.component_count() == 2);

  DistanceSpace::Matrix quad(4, std::vector<ExtReal>(4, kInf));
  for (int i = 0; i < 4; ++i) quad[i][i] = 0.0;
  quad[0][1] = quad[1][0] = 1.0;
  quad[2][3] = quad[3][2] = 1.0;
  DistanceSpace x = DistanceSpace::validate(quad);
  CHECK(x.components() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("set statistics") {
  DistanceSpace x = euclidean_import({{0.0}, {5.0}});
  std::vector<int> single{0};
  SetStats s = set_stats(x, single);
  CHECK(s.diam == ExtReal(0.0));
  CHECK(s.sep == kInf);

  std::vector<int> both{0, 1};
  s = set_stats(x, both);
  CHECK(s.diam == ExtReal(5.0));
  CHECK(s.real_diam == ExtReal(5.0));
  CHECK(s.sep == ExtReal(5.0));
}

TEST_CASE("cross statistics on the rectangle") {
  DistanceSpace x = rectangle_space();
  std::vector<int> a{0, 1}, b{2, 3};
  CHECK(ext_close(min_cross_distance(x, a, b), 10.0));
  for (PNorm p : {PNorm::one(), PNorm::two(), PNorm::infinity()})
    CHECK(ext_close(min_cross_distance_lp(x, a, b, p), 10.0));
  CHECK(min_cross_distance(x, {}, b) == ExtReal(0.0));
}

TEST_CASE("hausdorff distance conventions") {
  DistanceSpace x = rectangle_space();
  CHECK(hausdorff(x, std::vector<int>{}, std::vector<int>{}) == ExtReal(0.0));
  CHECK(hausdorff(x, std::vector<int>{}, std::vector<int>{0}) == kInf);
  std::vector<int> a{0, 1}, b{2, 3};
  CHECK(ext_close(hausdorff(x, a, b), 10.0));
}

TEST_CASE("lp tuple distance") {
  DistanceSpace x = euclidean_import({{0.0}, {3.0}, {4.0}});
  std::vector<int> f{0, 0}, g{1, 2};
  CHECK(lp_tuple_distance(x, f, f, PNorm::two()) == ExtReal(0.0));
  CHECK(ext_close(lp_tuple_distance(x, f, g, PNorm::two()), 5.0));
  CHECK(ext_close(lp_tuple_distance(x, f, g, PNorm::infinity()), 4.0));
  CHECK(ext_close(lp_tuple_distance(x, f, g, PNorm::one()), 7.0));
  CHECK(lp_tuple_distance(x, std::vector<int>{}, std::vector<int>{}, PNorm::one()) == ExtReal(0.0));
  CHECK_THROWS_AS(lp_tuple_distance(x, std::vector<int>{0}, std::vector<int>{0, 1}, PNorm::one()), Error);
}

TEST_CASE("euclidean import") {
  DistanceSpace line = euclidean_import({{0.0}, {1.0}});
  CHECK(ext_close(line.d(0, 1), 1.0));

  DistanceSpace x = rectangle_space();
  CHECK(ext_close(x.d(0, 1), 2.0 * std::sqrt(3.0)));
  CHECK(ext_close(x.d(0, 2), 10.0));

  DistanceSpace t = triangle_centroid_space();
  CHECK(ext_close(t.d(0, 1), 1.0 / std::sqrt(3.0)));
  CHECK(ext_close(t.d(1, 2), 1.0));

  CHECK_THROWS_AS(euclidean_import({{0.0}, {0.0, 1.0}}), Error);
}

TEST_CASE("space json round trip with inf entries") {
  DistanceSpace::Matrix split = {{0.0, kInf}, {kInf, 0.0}};
  DistanceSpace x = DistanceSpace::validate({"u", "v"}, split);
  Json j = space_to_json(x);
  CHECK(j["matrix"][0][1] == "inf");
  DistanceSpace back = space_from_json(j);
  CHECK(back.label(0) == "u");
  CHECK(back.d(0, 1) == kInf);

  Json points = {{"dim", 2}, {"points", {{0.0, 0.0}, {3.0, 4.0}}}};
  CHECK(ext_close(points_from_json(points).d(0, 1), 5.0));
}
