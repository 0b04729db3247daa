#include <doctest.h>

#include <cmath>

#include "metrize/error.hpp"
#include "metrize/examples.hpp"
#include "metrize/functor_metric.hpp"

using namespace metrize;

namespace {
const double kSqrt3 = std::sqrt(3.0);
const ExtReal kInf = ExtReal::infinity();
}  // namespace

TEST_CASE("element enumeration") {
  DistanceSpace three = euclidean_import({{0.0}, {1.0}, {2.0}});
  auto h2 = make_capped_hyperspace(2);
  CHECK(enumerate_elements(*h2, three).size() == 7);

  DistanceSpace two = euclidean_import({{0.0}, {1.0}});
  auto p2 = make_power_functor(2);
  CHECK(enumerate_elements(*p2, two).size() == 4);

  auto pairs = make_nonempty_pairs();
  CHECK(enumerate_elements(*pairs, rectangle_space()).size() == 10);

  CHECK_THROWS_AS(enumerate_elements(*pairs, euclidean_import({})), Error);
}

TEST_CASE("rectangle pair distances") {
  auto functor = make_nonempty_pairs();
  DistanceSpace x = rectangle_space();
  const Element a = Element::set({0, 1}), b = Element::set({2, 3});

  // At p = 1 the cheapest route collapses each pair to one point and hops
  // across: 2 sqrt 3 + 10 + 2 sqrt 3. For larger p the one-step move of both
  // points in parallel wins: 10 * 2^(1/p), reaching the Hausdorff value 10
  // at p = inf.
  ExtReal d1 = FunctorMetric(*functor, x, PNorm::one()).distance(a, b);
  CHECK(ext_close(d1, 10.0 + 4.0 * kSqrt3));
  ExtReal d2 = FunctorMetric(*functor, x, PNorm::two()).distance(a, b);
  CHECK(ext_close(d2, 10.0 * std::sqrt(2.0)));
  ExtReal di = FunctorMetric(*functor, x, PNorm::infinity()).distance(a, b);
  CHECK(ext_close(di, 10.0));

  // The chain enumeration oracle agrees on all three exponents.
  for (PNorm p : {PNorm::one(), PNorm::two(), PNorm::infinity()}) {
    ExtReal fast = FunctorMetric(*functor, x, p).distance(a, b);
    ExtReal slow = chain_oracle(*functor, x, p, a, b, 9);
    CHECK(ext_close(fast, slow, 1e-12));
  }
}

TEST_CASE("extended rectangle pair distances") {
  auto functor = make_nonempty_pairs();
  DistanceSpace y = rectangle_extended_space();
  const Element a = Element::set({0, 1}), b = Element::set({2, 3});

  ExtReal d1 = FunctorMetric(*functor, y, PNorm::one()).distance(a, b);
  CHECK(ext_close(d1, 16.0));
  ExtReal d2 = FunctorMetric(*functor, y, PNorm::two()).distance(a, b);
  CHECK(ext_close(d2, 8.0 + 4.0 * std::sqrt(2.0)));
  ExtReal di = FunctorMetric(*functor, y, PNorm::infinity()).distance(a, b);
  CHECK(ext_close(di, 10.0));

  for (PNorm p : {PNorm::one(), PNorm::two(), PNorm::infinity()}) {
    ExtReal fast = FunctorMetric(*functor, y, p).distance(a, b);
    ExtReal slow = chain_oracle(*functor, y, p, a, b, 6);
    CHECK(ext_close(fast, slow, 1e-12));
  }
}

TEST_CASE("chain certificates") {
  auto functor = make_nonempty_pairs();
  DistanceSpace x = rectangle_space();
  const Element a = Element::set({0, 1}), b = Element::set({2, 3});
  auto result = FunctorMetric(*functor, x, PNorm::one()).distance_with_chain(a, b);
  REQUIRE(result.chain.has_value());
  CHECK(chain_is_valid(*functor, x, PNorm::one(), a, b, *result.chain, result.distance));

  auto same = FunctorMetric(*functor, x, PNorm::one()).distance_with_chain(a, a);
  CHECK(same.distance == ExtReal(0.0));
  CHECK(same.chain->empty());
}

TEST_CASE("chain oracle basics") {
  DistanceSpace two = two_point_space(1.0);
  auto h1 = make_capped_hyperspace(1);
  CHECK(chain_oracle(*h1, two, PNorm::one(), Element::set({0}), Element::set({0}), 2) ==
        ExtReal(0.0));
  CHECK(ext_close(chain_oracle(*h1, two, PNorm::one(), Element::set({0}), Element::set({1}), 2),
                  1.0));
}

TEST_CASE("distance matrix shapes and infinities") {
  auto p1 = make_power_functor(1);
  DistanceSpace one = euclidean_import({{0.0}});
  FunctorMetric single(*p1, one, PNorm::one());
  CHECK(single.elements().size() == 1);
  CHECK(single.distance_matrix() == std::vector<std::vector<ExtReal>>{{ExtReal(0.0)}});

  // A symmetric-difference pair collapses under the quotient map, so the
  // empty element is at finite distance from it inside one component.
  auto sd = make_symdiff_pairs();
  DistanceSpace two = two_point_space(1.0);
  FunctorMetric sdm(*sd, two, PNorm::one());
  CHECK(ext_close(sdm.distance(Element::empty(), Element::set({0, 1})), 1.0));

  DistanceSpace::Matrix split = {{0.0, kInf}, {kInf, 0.0}};
  DistanceSpace apart = DistanceSpace::validate(split);
  auto h1b = make_capped_hyperspace(1);
  FunctorMetric m(*h1b, apart, PNorm::one());
  CHECK(m.distance(Element::set({0}), Element::set({1})) == kInf);
}

TEST_CASE("unknown elements are rejected") {
  auto pairs = make_nonempty_pairs();
  DistanceSpace x = rectangle_space();
  FunctorMetric metric(*pairs, x, PNorm::one());
  CHECK_THROWS_AS(metric.distance(Element::empty(), Element::set({0})), Error);
}

TEST_CASE("induced lipschitz constants") {
  auto h2 = make_capped_hyperspace(2);
  DistanceSpace x = euclidean_import({{0.0}, {1.0}, {3.0}});
  std::vector<int> identity{0, 1, 2};
  auto [lf, lff] = induced_map_lipschitz(*h2, x, x, identity, PNorm::one());
  CHECK(ext_close(lf, 1.0));
  CHECK(lff.value() <= 1.0 + 1e-9);

  DistanceSpace one = euclidean_import({{0.0}});
  std::vector<int> constant{0, 0, 0};
  auto [cf, cff] = induced_map_lipschitz(*h2, x, one, constant, PNorm::one());
  CHECK(cf == ExtReal(0.0));
  CHECK(cff == ExtReal(0.0));
}

TEST_CASE("power functor degenerate degrees") {
  DistanceSpace x = euclidean_import({{0.0}, {2.0}, {5.0}});

  // Degree 1 reproduces the base space.
  auto p1 = make_power_functor(1);
  FunctorMetric m1(*p1, x, PNorm::two());
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j)
      CHECK(ext_close(m1.distance(Element::tuple({i}), Element::tuple({j})), x.d(i, j)));

  // Degree 0 has a single element.
  auto p0 = make_power_functor(0);
  FunctorMetric m0(*p0, x, PNorm::one());
  CHECK(m0.elements().size() == 1);
  CHECK(m0.distance(Element::tuple({}), Element::tuple({})) == ExtReal(0.0));
}

TEST_CASE("infinite coordinates propagate") {
  DistanceSpace::Matrix split = {{0.0, kInf}, {kInf, 0.0}};
  DistanceSpace apart = DistanceSpace::validate(split);
  std::vector<int> f{0, 0}, g{0, 1};
  CHECK(lp_tuple_distance(apart, f, g, PNorm::one()) == kInf);
  CHECK(lp_tuple_distance(apart, f, g, PNorm::infinity()) == kInf);
}

TEST_CASE("engine edge budget") {
  auto pairs = make_nonempty_pairs();
  DistanceSpace x = rectangle_space();
  CHECK_THROWS_AS(FunctorMetric(*pairs, x, PNorm::one(), 10), Error);
}
