#include "metrize/examples.hpp"

#include <cmath>
#include <limits>

#include "metrize/entropy.hpp"
#include "metrize/functor_metric.hpp"
#include "metrize/group_norms.hpp"

namespace metrize {

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

DistanceSpace rectangle_space() {
  return euclidean_import({{-5.0, kSqrt3}, {-5.0, -kSqrt3}, {5.0, kSqrt3}, {5.0, -kSqrt3}},
                          {"a+", "a-", "b+", "b-"});
}

DistanceSpace rectangle_extended_space() {
  return euclidean_import({{-5.0, kSqrt3},
                           {-5.0, -kSqrt3},
                           {5.0, kSqrt3},
                           {5.0, -kSqrt3},
                           {-4.0, 0.0},
                           {4.0, 0.0}},
                          {"a+", "a-", "b+", "b-", "m-", "m+"});
}

DistanceSpace triangle_centroid_space() {
  return euclidean_import({{0.5, kSqrt3 / 6.0}, {0.0, 0.0}, {1.0, 0.0}, {0.5, kSqrt3 / 2.0}},
                          {"z0", "z1", "z2", "z3"});
}

DistanceSpace two_point_space(double d) {
  return DistanceSpace::validate({"x", "y"}, {{0.0, ExtReal(d)}, {ExtReal(d), 0.0}});
}

std::vector<ExampleRow> reproduce_examples() {
  std::vector<ExampleRow> rows;
  auto push = [&](const std::string& name, double expected, ExtReal actual, double tol) {
    double value = actual.finite() ? actual.value() : std::numeric_limits<double>::infinity();
    rows.push_back({name, expected, value, tol, std::fabs(value - expected) <= tol});
  };

  // Rectangle example: d^p between the two vertical pairs.
  {
    auto functor = make_nonempty_pairs();
    const Element a = Element::set({0, 1}), b = Element::set({2, 3});
    DistanceSpace x = rectangle_space();
    DistanceSpace y = rectangle_extended_space();
    for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
      PNorm pn(p);
      std::string tag = std::isinf(p) ? "inf" : (p == 1.0 ? "1" : "2");
      push("rectangle/X/p=" + tag, 10.0 + 4.0 * kSqrt3,
           FunctorMetric(*functor, x, pn).distance(a, b), 1e-9);
      push("rectangle/Y/p=" + tag, 8.0 + 4.0 * std::pow(2.0, std::isinf(p) ? 0.0 : 1.0 / p),
           FunctorMetric(*functor, y, pn).distance(a, b), 1e-9);
    }
  }

  // Triangle example: unit corner charges against the zero function in Z_3.
  {
    DistanceSpace x = triangle_centroid_space();
    FinSupportFunction phi{3, {0, 1, 1, 1}};
    FinSupportFunction zero = FinSupportFunction::zero(3, 4);
    push("triangle/d1", kSqrt3, d1_group(x, phi, zero).value, 1e-9);
    push("triangle/restricted", 2.0, norm_restricted(x, phi), 1e-9);
  }

  // Graev example: modulus 4, two points at distance 1.
  {
    DistanceSpace x = two_point_space(1.0);
    FinSupportFunction a{4, {2, 0}}, b{4, {0, 2}};
    push("graev/m4", 2.0, graev_distance(x, a, b, 1), 1e-9);
    push("graev/d1", 1.0, d1_group(x, a, b).value, 1e-9);
  }

  // Cantor slope: level-8 sample across the eight ternary scales.
  {
    DistanceSpace c8 = cantor_space(8);
    std::vector<double> scales;
    for (int j = 1; j <= 8; ++j) scales.push_back(std::pow(3.0, -j));
    auto report = box_dim_estimate(c8, scales);
    push("cantor/slope", std::log(2.0) / std::log(3.0), report.ls_slope, 1e-2);
  }
  return rows;
}

}  // namespace metrize
