#pragma once

#include <vector>

#include "metrize/distance_space.hpp"
#include "metrize/functor_metric.hpp"

namespace metrize {

// A cover of the index set by blocks of diameter <= epsilon.
struct CoverCertificate {
  double epsilon;
  std::vector<std::vector<int>> blocks;

  bool valid_for(const DistanceSpace& x) const;
};

// Exact metric entropy: the minimum number of diameter-<=eps subsets
// covering X. Sets of diameter <= eps are cliques of the threshold graph,
// so this is a minimum clique cover, solved per component by exact
// complement coloring (branch and bound).
std::pair<int, CoverCertificate> min_cover(const DistanceSpace& x, double eps);

// sup { E_eps(A) : A subset of X, diam(A) < delta } (strict), computed over
// maximal cliques of the strict threshold graph.
int local_entropy(const DistanceSpace& x, double eps, double delta);

struct ScaleRow {
  double scale;
  int count;
  double slope;  // finite-difference slope to the previous row; 0 for the first
};

struct BoxDimReport {
  double upper_slope;
  double lower_slope;
  double ls_slope;  // least-squares fit of ln E against ln(1/eps)
  std::vector<ScaleRow> rows;
};

// Finite-scale box-counting slopes over a decreasing scale list (>= 2).
BoxDimReport box_dim_estimate(const DistanceSpace& x, const std::vector<double>& scales);

struct EntropyCheckReport {
  double epsilon;
  double delta;
  int entropy_fpx;          // E_eps(F^p X)
  int carrier_size;         // |Fn|
  int entropy_power;        // E_eps(X^n, d^p)
  int entropy_base_scaled;  // E_{eps / n^(1/p)}(X)
  bool bound_power_ok;      // E(F^pX) <= |Fn| * E(X^n)
  bool bound_base_ok;       // |Fn| * E(X^n) <= |Fn| * E_base^n
  bool supports_preserving;
  int local_fpx = 0;        // E_{eps,delta}(F^pX), support-preserving only
  int local_power = 0;      // E_{eps,delta'}(X^n)
  int local_base = 0;       // E_{eps',delta'}(X)
  bool local_power_ok = true;
  bool local_base_ok = true;

  bool all_ok() const {
    return bound_power_ok && bound_base_ok && local_power_ok && local_base_ok;
  }
};

// Verifies the functor entropy inequalities exactly on a finite instance.
EntropyCheckReport functor_entropy_check(const Functor& functor, const DistanceSpace& x,
                                         PNorm p, double eps, double delta);

// X^n with the l^p product distance, labels "(a,b,...)".
DistanceSpace power_space(const DistanceSpace& x, int n, PNorm p);

// The level-k ternary Cantor sample {sum x_i 3^-i : x_i in {0, 2}}, 2^k points.
DistanceSpace cantor_space(int level);

// 2^k uniformly spaced points {i 2^-k : 0 <= i < 2^k}.
DistanceSpace dyadic_grid(int k);

}  // namespace metrize
