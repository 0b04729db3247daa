#include "metrize/tight_span.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "metrize/error.hpp"
#include "metrize/rng.hpp"

namespace metrize {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<int> AdmissibleFunction::finite_part() const {
  std::vector<int> part;
  for (int i = 0; i < static_cast<int>(values.size()); ++i)
    if (std::isfinite(values[i])) part.push_back(i);
  return part;
}

AdmissibilityReport is_admissible(const DistanceSpace& x, const AdmissibleFunction& f,
                                  double tol) {
  if (static_cast<int>(f.values.size()) != x.size())
    throw Error("LengthMismatch", "value table does not match the space");
  for (int i = 0; i < x.size(); ++i)
    if (std::isnan(f.values[i]) || f.values[i] < 0.0) return {false, std::make_pair(i, i)};
  const int n = x.size();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double lhs = f.values[i] + f.values[j];
      double rhs = x.d(i, j).value();
      if (std::isinf(rhs) && std::isinf(lhs)) continue;
      if (lhs < rhs - tol) return {false, std::make_pair(i, j)};
    }
  // Two finite values across an inf gap would already have violated the
  // inequality above, so the finite part lies in one component.
  return {true, std::nullopt};
}

std::vector<double> star(const DistanceSpace& x, const AdmissibleFunction& f) {
  auto report = is_admissible(x, f);
  if (!report.admissible)
    throw Error("NotAdmissible",
                {report.witness->first, report.witness->second},
                "star requires an admissible function");
  const int n = x.size();
  std::vector<double> out(n, kInf);
  auto part = f.finite_part();
  if (part.empty()) return out;
  const int comp = x.component_ids()[part.front()];
  for (int v = 0; v < n; ++v) {
    if (x.component_ids()[v] != comp) continue;
    double best = -kInf;
    for (int z = 0; z < n; ++z) {
      if (x.component_ids()[z] != comp || !std::isfinite(f.values[z])) continue;
      best = std::max(best, x.d(v, z).value() - f.values[z]);
    }
    out[v] = best;
  }
  return out;
}

AdmissibleFunction normalize_component(const DistanceSpace& x, const AdmissibleFunction& f) {
  auto report = is_admissible(x, f);
  if (!report.admissible)
    throw Error("NotAdmissible",
                {report.witness->first, report.witness->second},
                "normalize_component requires an admissible function");
  auto part = f.finite_part();
  if (part.empty()) return f;  // the Delta_empty case: leave f == inf alone
  const int anchor = part.front();
  const int comp = x.component_ids()[anchor];
  AdmissibleFunction g = f;
  for (int v = 0; v < x.size(); ++v)
    if (x.component_ids()[v] == comp && !std::isfinite(f.values[v]))
      g.values[v] = f.values[anchor] + x.d(anchor, v).value();
  return g;
}

ProjectionResult project_extremal(const DistanceSpace& x, const AdmissibleFunction& f,
                                  double tol, int max_iter) {
  AdmissibleFunction cur = normalize_component(x, f);
  double residual = 0.0;
  for (int iter = 1; iter <= max_iter; ++iter) {
    std::vector<double> st = star(x, cur);
    residual = 0.0;
    AdmissibleFunction next = cur;
    for (int v = 0; v < x.size(); ++v) {
      if (!std::isfinite(cur.values[v])) continue;
      double q = 0.5 * (cur.values[v] + st[v]);
      residual = std::max(residual, cur.values[v] - q);
      next.values[v] = q;
    }
    cur = std::move(next);
    if (residual < tol) return {std::move(cur), residual, iter};
  }
  throw Error("NoConvergence",
              "projection residual " + std::to_string(residual) + " after " +
                  std::to_string(max_iter) + " iterations");
}

bool is_extremal(const DistanceSpace& x, const AdmissibleFunction& f, double tol) {
  auto report = is_admissible(x, f);
  if (!report.admissible)
    throw Error("NotAdmissible",
                {report.witness->first, report.witness->second},
                "is_extremal requires an admissible function");
  auto part = f.finite_part();
  if (part.empty()) return true;
  const int comp = x.component_ids()[part.front()];
  for (int v = 0; v < x.size(); ++v)
    if (x.component_ids()[v] == comp && !std::isfinite(f.values[v]))
      return false;  // finite part must be the whole component
  std::vector<double> st = star(x, f);
  for (int v = 0; v < x.size(); ++v) {
    if (x.component_ids()[v] != comp) continue;
    if (std::fabs(f.values[v] - st[v]) >= tol) return false;
  }
  return true;
}

AdmissibleFunction kuratowski(const DistanceSpace& x, int x0) {
  if (x0 < 0 || x0 >= x.size()) throw Error("IndexOutOfRange", {x0}, "kuratowski");
  AdmissibleFunction f;
  f.values.reserve(x.size());
  for (int v = 0; v < x.size(); ++v) f.values.push_back(x.d(x0, v).value());
  return f;
}

ExtReal sup_distance(std::span<const double> f, std::span<const double> g) {
  ExtReal best = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    ExtReal a = std::isfinite(f[i]) ? ExtReal(f[i]) : ExtReal::infinity();
    ExtReal b = std::isfinite(g[i]) ? ExtReal(g[i]) : ExtReal::infinity();
    best = ext_max(best, ext_gap(a, b));
  }
  return best;
}

AdmissibleFunction random_admissible(const DistanceSpace& x, std::uint64_t seed) {
  Rng rng(seed);
  const int n = x.size();
  AdmissibleFunction f;
  f.values.assign(n, kInf);
  if (n == 0) return f;
  const int comp = x.component_ids()[rng.below(n)];
  std::vector<int> block;
  for (int v = 0; v < n; ++v)
    if (x.component_ids()[v] == comp) block.push_back(v);
  double spread = set_stats(x, block).real_diam.value();
  if (spread == 0.0) spread = 1.0;
  // Upper envelope of shifted cone functions d_s - t_s over a random subset.
  std::vector<double> env(n, -kInf);
  bool any = false;
  for (int s : block) {
    if (!rng.chance(0.5) && any) continue;
    any = true;
    double shift = rng.uniform(0.0, spread);
    for (int v : block) env[v] = std::max(env[v], x.d(s, v).value() - shift);
  }
  // One star pass restores admissibility: max(h, h*) is admissible for any h.
  for (int v : block) {
    double st = -kInf;
    for (int z : block) st = std::max(st, x.d(v, z).value() - env[z]);
    f.values[v] = std::max(env[v], st);
  }
  return f;
}

std::vector<AdmissibleFunction> sample_tight_span_points(const DistanceSpace& x, int count,
                                                         std::uint64_t seed) {
  std::vector<AdmissibleFunction> pts;
  pts.reserve(static_cast<std::size_t>(x.size()) + count);
  for (int v = 0; v < x.size(); ++v) pts.push_back(kuratowski(x, v));
  for (int k = 0; k < count; ++k) {
    auto f = random_admissible(x, Rng::derive(seed, 0x7453, k));
    pts.push_back(project_extremal(x, f).function);
  }
  return pts;
}

DistanceSpace sample_tight_span(const DistanceSpace& x, int count, std::uint64_t seed) {
  if (count < 0) throw Error("IndexOutOfRange", "sample count must be >= 0");
  auto pts = sample_tight_span_points(x, count, seed);
  std::vector<std::string> labels = x.labels();
  for (int k = 0; k < count; ++k) labels.push_back("s" + std::to_string(k));
  const int m = static_cast<int>(pts.size());
  std::vector<ExtReal> flat(static_cast<std::size_t>(m) * m, ExtReal(0.0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      ExtReal d = sup_distance(pts[i].values, pts[j].values);
      flat[static_cast<std::size_t>(i) * m + j] = d;
      flat[static_cast<std::size_t>(j) * m + i] = d;
    }
  return DistanceSpace::from_trusted(std::move(labels), std::move(flat));
}

}  // namespace metrize
