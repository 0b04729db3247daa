#include <doctest.h>

#include <cmath>
#include <limits>

#include "metrize/error.hpp"
#include "metrize/examples.hpp"
#include "metrize/functor_metric.hpp"
#include "metrize/tight_span.hpp"

using namespace metrize;

namespace {
const double kInf = std::numeric_limits<double>::infinity();

DistanceSpace path3() {
  // x - y - z with d(x,y) = d(y,z) = 1, d(x,z) = 2
  return euclidean_import({{0.0}, {1.0}, {2.0}}, {"x", "y", "z"});
}
}  // namespace

TEST_CASE("admissibility") {
  DistanceSpace x = two_point_space(1.0);
  CHECK(is_admissible(x, kuratowski(x, 0)).admissible);

  AdmissibleFunction zero{{0.0, 0.0}};
  auto report = is_admissible(x, zero);
  CHECK_FALSE(report.admissible);
  CHECK(report.witness == std::make_pair(0, 1));

  AdmissibleFunction inf_everywhere{{kInf, kInf}};
  CHECK(is_admissible(x, inf_everywhere).admissible);
}

TEST_CASE("star transform") {
  DistanceSpace x = path3();
  AdmissibleFunction dx = kuratowski(x, 0);
  auto st = star(x, dx);
  for (int v = 0; v < 3; ++v) CHECK(st[v] == doctest::Approx(dx.values[v]));

  DistanceSpace two = two_point_space(1.0);
  AdmissibleFunction ones{{1.0, 1.0}};
  auto st2 = star(two, ones);
  CHECK(st2[0] == doctest::Approx(0.0));
  CHECK(st2[1] == doctest::Approx(0.0));

  AdmissibleFunction inf_everywhere{{kInf, kInf}};
  auto st3 = star(two, inf_everywhere);
  CHECK(std::isinf(st3[0]));
  CHECK(std::isinf(st3[1]));

  CHECK_THROWS_AS(star(two, AdmissibleFunction{{0.0, 0.0}}), Error);
}

TEST_CASE("normalize component") {
  DistanceSpace x = path3();
  AdmissibleFunction partial{{0.0, kInf, kInf}};
  AdmissibleFunction g = normalize_component(x, partial);
  CHECK(g.values == kuratowski(x, 0).values);

  AdmissibleFunction whole = kuratowski(x, 1);
  CHECK(normalize_component(x, whole).values == whole.values);

  AdmissibleFunction inf_everywhere{{kInf, kInf, kInf}};
  CHECK(normalize_component(x, inf_everywhere).values == inf_everywhere.values);
}

TEST_CASE("projection onto extremal functions") {
  DistanceSpace two = two_point_space(1.0);
  auto fixed = project_extremal(two, kuratowski(two, 0));
  CHECK(sup_distance(fixed.function.values, kuratowski(two, 0).values) == ExtReal(0.0));

  auto mid = project_extremal(two, AdmissibleFunction{{1.0, 1.0}});
  CHECK(mid.function.values[0] == doctest::Approx(0.5));
  CHECK(mid.function.values[1] == doctest::Approx(0.5));
  CHECK(is_extremal(two, mid.function));

  DistanceSpace x = path3();
  AdmissibleFunction shifted = kuratowski(x, 0);
  for (double& v : shifted.values) v += 0.4;
  auto proj = project_extremal(x, shifted);
  CHECK(proj.residual < 1e-12);
  CHECK(is_extremal(x, proj.function));
  for (int v = 0; v < 3; ++v) CHECK(proj.function.values[v] <= shifted.values[v] + 1e-9);
}

TEST_CASE("extremality classification") {
  DistanceSpace two = two_point_space(1.0);
  CHECK(is_extremal(two, kuratowski(two, 0)));
  CHECK_FALSE(is_extremal(two, AdmissibleFunction{{1.0, 1.0}}));
  CHECK(is_extremal(two, AdmissibleFunction{{0.5, 0.5}}));
}

TEST_CASE("kuratowski embedding") {
  DistanceSpace two = two_point_space(1.0);
  CHECK(sup_distance(kuratowski(two, 0).values, kuratowski(two, 1).values) == ExtReal(1.0));
  CHECK(kuratowski(two, 0).values[0] == 0.0);

  DistanceSpace x = path3();
  CHECK(sup_distance(kuratowski(x, 0).values, kuratowski(x, 2).values) == ExtReal(2.0));
}

TEST_CASE("tight span sampling") {
  DistanceSpace two = two_point_space(1.0);
  DistanceSpace copy = sample_tight_span(two, 0, 7);
  CHECK(copy.size() == 2);
  CHECK(copy.d(0, 1) == ExtReal(1.0));

  DistanceSpace seg = sample_tight_span(two, 8, 7);
  for (int s = 2; s < seg.size(); ++s)
    CHECK(ext_close(seg.d(0, s) + seg.d(s, 1), 1.0));

  // Determinism in the seed.
  DistanceSpace again = sample_tight_span(two, 8, 7);
  for (int i = 0; i < seg.size(); ++i)
    for (int j = 0; j < seg.size(); ++j) CHECK(seg.d(i, j) == again.d(i, j));

  // Envelope points can only shorten functor distances (isometric embedding).
  DistanceSpace x = rectangle_space();
  DistanceSpace aug = sample_tight_span(x, 12, 3);
  auto functor = make_nonempty_pairs();
  const Element a = Element::set({0, 1}), b = Element::set({2, 3});
  for (PNorm p : {PNorm::one(), PNorm::two()}) {
    ExtReal direct = FunctorMetric(*functor, x, p).distance(a, b);
    ExtReal through = FunctorMetric(*functor, aug, p).distance(a, b);
    CHECK(through.value() <= direct.value() + 1e-9);
  }
}
