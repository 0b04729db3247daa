#pragma once

#include <cmath>
#include <limits>
#include <span>

#include "metrize/error.hpp"
#include "metrize/ext_real.hpp"

namespace metrize {

// The exponent of an l^p norm: a real p >= 1 or infinity.
class PNorm {
 public:
  explicit PNorm(double p) : p_(p) {
    if (std::isnan(p) || p < 1.0)
      throw Error("InvalidExponent", "p must lie in [1, inf]");
  }

  static PNorm one() { return PNorm(1.0); }
  static PNorm two() { return PNorm(2.0); }
  static PNorm infinity() { return PNorm(std::numeric_limits<double>::infinity()); }

  bool is_inf() const { return std::isinf(p_); }
  double value() const { return p_; }

  friend bool operator==(PNorm a, PNorm b) { return a.p_ == b.p_; }

 private:
  double p_;
};

// (sum_i v_i^p)^(1/p), or max_i v_i for p = inf. Empty input gives 0.
inline ExtReal lp_norm(std::span<const ExtReal> values, PNorm p) {
  if (p.is_inf()) {
    ExtReal best = 0.0;
    for (ExtReal v : values) best = ext_max(best, v);
    return best;
  }
  double sum = 0.0;
  for (ExtReal v : values) {
    if (!v.finite()) return ExtReal::infinity();
    sum += (p.value() == 1.0) ? v.value() : std::pow(v.value(), p.value());
  }
  if (std::isinf(sum)) return ExtReal::infinity();
  return (p.value() == 1.0) ? sum : std::pow(sum, 1.0 / p.value());
}

// s^(1/p) for a cardinality s, with s^(1/inf) = 1 for s > 0 and 0^(1/p) = 0.
inline double card_root(std::size_t s, PNorm p) {
  if (s == 0) return 0.0;
  if (p.is_inf()) return 1.0;
  return std::pow(static_cast<double>(s), 1.0 / p.value());
}

// n^((q-p)/(qp)) = n^(1/p - 1/q), the comparison factor between l^p and l^q.
inline double lp_comparison_factor(std::size_t n, PNorm p, PNorm q) {
  if (n == 0) return 1.0;
  double inv_p = p.is_inf() ? 0.0 : 1.0 / p.value();
  double inv_q = q.is_inf() ? 0.0 : 1.0 / q.value();
  return std::pow(static_cast<double>(n), inv_p - inv_q);
}

}  // namespace metrize
