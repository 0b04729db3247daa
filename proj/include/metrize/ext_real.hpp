#pragma once

#include <cmath>
#include <compare>
#include <limits>

#include "metrize/error.hpp"

namespace metrize {

// A value in [0, inf]. Arithmetic extends the usual operations by
// x + inf = inf, inf * 0 = 0 and x * inf = inf for x > 0.
class ExtReal {
 public:
  ExtReal() = default;
  ExtReal(double v) : v_(v) {
    if (std::isnan(v) || v < 0.0)
      throw Error("NegativeDistance", "ExtReal requires a value in [0, inf]");
  }

  static ExtReal infinity() {
    ExtReal r;
    r.v_ = std::numeric_limits<double>::infinity();
    return r;
  }

  bool finite() const { return std::isfinite(v_); }
  double value() const { return v_; }

  friend ExtReal operator+(ExtReal a, ExtReal b) { return unchecked(a.v_ + b.v_); }

  friend ExtReal operator*(ExtReal a, ExtReal b) {
    if (a.v_ == 0.0 || b.v_ == 0.0) return unchecked(0.0);
    return unchecked(a.v_ * b.v_);
  }

  friend auto operator<=>(ExtReal a, ExtReal b) { return a.v_ <=> b.v_; }
  friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }

 private:
  static ExtReal unchecked(double v) {
    ExtReal r;
    r.v_ = v;
    return r;
  }

  double v_ = 0.0;
};

inline ExtReal ext_min(ExtReal a, ExtReal b) { return a < b ? a : b; }
inline ExtReal ext_max(ExtReal a, ExtReal b) { return a < b ? b : a; }

// |a - b| with the convention that two infinite values are at distance 0
// and a finite/infinite pair is at distance inf.
inline ExtReal ext_gap(ExtReal a, ExtReal b) {
  if (!a.finite() && !b.finite()) return 0.0;
  if (!a.finite() || !b.finite()) return ExtReal::infinity();
  return std::fabs(a.value() - b.value());
}

// Absolute comparison tolerance used throughout the test suites.
inline constexpr double kTestTol = 1e-9;

inline bool ext_close(ExtReal a, ExtReal b, double tol = kTestTol) {
  if (!a.finite() || !b.finite()) return a == b;
  return std::fabs(a.value() - b.value()) <= tol;
}

}  // namespace metrize
