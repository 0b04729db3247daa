#include "metrize/distance_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "metrize/error.hpp"

namespace metrize {

std::optional<AxiomViolation> DistanceSpace::check(const Matrix& matrix) {
  const int n = static_cast<int>(matrix.size());
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != n)
      return AxiomViolation{"NotSquare", {static_cast<int>(&row - matrix.data())}};
  for (int i = 0; i < n; ++i)
    if (matrix[i][i] != ExtReal(0.0)) return AxiomViolation{"NonZeroDiagonal", {i}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (matrix[i][j] != matrix[j][i]) return AxiomViolation{"Asymmetric", {i, j}};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        if (matrix[i][k] > matrix[i][j] + matrix[j][k])
          return AxiomViolation{"TriangleViolation", {i, k, j}};
  return std::nullopt;
}

DistanceSpace DistanceSpace::validate(std::vector<std::string> labels, const Matrix& matrix) {
  if (auto bad = check(matrix)) throw Error(bad->code, bad->witness, "invalid distance matrix");
  const int n = static_cast<int>(matrix.size());
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  if (static_cast<int>(labels.size()) != n)
    throw Error("LabelMismatch", "label count differs from matrix size");
  DistanceSpace x;
  x.labels_ = std::move(labels);
  x.d_.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : matrix) x.d_.insert(x.d_.end(), row.begin(), row.end());
  x.compute_components();
  return x;
}

DistanceSpace DistanceSpace::validate(const Matrix& matrix) {
  return validate({}, matrix);
}

DistanceSpace DistanceSpace::from_trusted(std::vector<std::string> labels,
                                          std::vector<ExtReal> flat) {
  DistanceSpace x;
  x.labels_ = std::move(labels);
  x.d_ = std::move(flat);
  x.compute_components();
  return x;
}

void DistanceSpace::compute_components() {
  const int n = size();
  component_.assign(n, -1);
  component_count_ = 0;
  for (int i = 0; i < n; ++i) {
    if (component_[i] >= 0) continue;
    // Finiteness is transitive under the triangle inequality, so a single
    // sweep from each unvisited point labels its whole component.
    std::vector<int> stack{i};
    component_[i] = component_count_;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (component_[w] < 0 && d(v, w).finite()) {
          component_[w] = component_count_;
          stack.push_back(w);
        }
    }
    ++component_count_;
  }
}

int DistanceSpace::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  throw Error("IndexOutOfRange", "unknown label: " + label);
}

std::vector<std::vector<int>> DistanceSpace::components() const {
  std::vector<std::vector<int>> blocks(component_count_);
  for (int i = 0; i < size(); ++i) blocks[component_[i]].push_back(i);
  return blocks;
}

DistanceSpace::Matrix DistanceSpace::matrix() const {
  Matrix m(size(), std::vector<ExtReal>(size()));
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) m[i][j] = d(i, j);
  return m;
}

namespace {
void check_indices(const DistanceSpace& x, std::span<const int> a) {
  for (int i : a)
    if (i < 0 || i >= x.size()) throw Error("IndexOutOfRange", {i}, "index out of range");
}
}  // namespace

SetStats set_stats(const DistanceSpace& x, std::span<const int> a) {
  check_indices(x, a);
  SetStats s{0.0, 0.0, ExtReal::infinity()};
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] == a[j]) continue;
      ExtReal d = x.d(a[i], a[j]);
      s.diam = ext_max(s.diam, d);
      if (d.finite()) s.real_diam = ext_max(s.real_diam, d);
      s.sep = ext_min(s.sep, d);
    }
  return s;
}

ExtReal min_cross_distance(const DistanceSpace& x, std::span<const int> a,
                           std::span<const int> b) {
  check_indices(x, a);
  check_indices(x, b);
  if (a.empty() || b.empty()) return 0.0;
  ExtReal best = ExtReal::infinity();
  for (int i : a)
    for (int j : b) best = ext_min(best, x.d(i, j));
  return best;
}

ExtReal min_cross_distance_lp(const DistanceSpace& x, std::span<const int> a,
                              std::span<const int> b, PNorm p) {
  check_indices(x, a);
  check_indices(x, b);
  std::vector<ExtReal> per_component;
  for (const auto& block : x.components()) {
    std::vector<int> ae, be;
    for (int i : a)
      if (x.component_ids()[i] == x.component_ids()[block.front()]) ae.push_back(i);
    for (int i : b)
      if (x.component_ids()[i] == x.component_ids()[block.front()]) be.push_back(i);
    per_component.push_back(min_cross_distance(x, ae, be));
  }
  return lp_norm(per_component, p);
}

ExtReal hausdorff(const DistanceSpace& x, std::span<const int> a,
                  std::span<const int> b) {
  check_indices(x, a);
  check_indices(x, b);
  if (!a.empty() && !b.empty()) {
    ExtReal result = 0.0;
    for (int i : a) {
      ExtReal nearest = ExtReal::infinity();
      for (int j : b) nearest = ext_min(nearest, x.d(i, j));
      result = ext_max(result, nearest);
    }
    for (int j : b) {
      ExtReal nearest = ExtReal::infinity();
      for (int i : a) nearest = ext_min(nearest, x.d(i, j));
      result = ext_max(result, nearest);
    }
    return result;
  }
  std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  return sa == sb ? ExtReal(0.0) : ExtReal::infinity();
}

ExtReal lp_tuple_distance(const DistanceSpace& x, std::span<const int> f,
                          std::span<const int> g, PNorm p) {
  if (f.size() != g.size())
    throw Error("LengthMismatch", "tuples must have equal length");
  check_indices(x, f);
  check_indices(x, g);
  std::vector<ExtReal> coords;
  coords.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) coords.push_back(x.d(f[i], g[i]));
  return lp_norm(coords, p);
}

DistanceSpace euclidean_import(const std::vector<std::vector<double>>& points,
                               std::vector<std::string> labels) {
  const int n = static_cast<int>(points.size());
  const std::size_t dim = points.empty() ? 0 : points.front().size();
  for (const auto& pt : points)
    if (pt.size() != dim) throw Error("DimensionMismatch", "point dimensions differ");
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  if (static_cast<int>(labels.size()) != n)
    throw Error("LabelMismatch", "label count differs from point count");
  std::vector<ExtReal> flat(static_cast<std::size_t>(n) * n, ExtReal(0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        double diff = points[i][k] - points[j][k];
        sq += diff * diff;
      }
      ExtReal d = std::sqrt(sq);
      flat[static_cast<std::size_t>(i) * n + j] = d;
      flat[static_cast<std::size_t>(j) * n + i] = d;
    }
  return DistanceSpace::from_trusted(std::move(labels), std::move(flat));
}

DistanceSpace subspace(const DistanceSpace& x, std::span<const int> keep) {
  check_indices(x, keep);
  const int m = static_cast<int>(keep.size());
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int i : keep) labels.push_back(x.label(i));
  std::vector<ExtReal> flat(static_cast<std::size_t>(m) * m, ExtReal(0.0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      flat[static_cast<std::size_t>(i) * m + j] = x.d(keep[i], keep[j]);
  return DistanceSpace::from_trusted(std::move(labels), std::move(flat));
}

}  // namespace metrize
