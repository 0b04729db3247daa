#include "metrize/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "metrize/error.hpp"

namespace metrize {

namespace {

// Exact chromatic number of a small graph (adjacency bitmasks) by iterative
// deepening over the color count with greedy bounds.
class ExactColoring {
 public:
  explicit ExactColoring(std::vector<std::uint32_t> adj) : adj_(std::move(adj)) {}

  // Returns the coloring classes of an optimal proper coloring.
  std::vector<std::vector<int>> solve() {
    const int n = static_cast<int>(adj_.size());
    if (n == 0) return {};
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return __builtin_popcount(adj_[a]) > __builtin_popcount(adj_[b]);
    });
    int lower = greedy_clique_size();
    auto greedy = greedy_coloring();
    for (int k = lower; k < static_cast<int>(greedy.size()); ++k) {
      colors_.assign(n, -1);
      classes_.assign(k, 0u);
      if (try_color(0, k)) {
        std::vector<std::vector<int>> out(k);
        for (int v = 0; v < n; ++v) out[colors_[v]].push_back(v);
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const std::vector<int>& c) { return c.empty(); }),
                  out.end());
        return out;
      }
    }
    return greedy;
  }

 private:
  int greedy_clique_size() const {
    // Grow a clique greedily along the degree order.
    std::uint32_t clique = 0;
    int size = 0;
    for (int v : order_) {
      bool ok = true;
      for (int u = 0; u < static_cast<int>(adj_.size()); ++u)
        if ((clique >> u) & 1u)
          if (!((adj_[v] >> u) & 1u)) { ok = false; break; }
      if (ok) {
        clique |= 1u << v;
        ++size;
      }
    }
    return std::max(size, 1);
  }

  std::vector<std::vector<int>> greedy_coloring() const {
    std::vector<std::vector<int>> classes;
    std::vector<std::uint32_t> masks;
    for (int v : order_) {
      bool placed = false;
      for (std::size_t c = 0; c < classes.size() && !placed; ++c)
        if (!((masks[c] >> v) & 1u) && !(masks[c] & adj_[v])) {
          classes[c].push_back(v);
          masks[c] |= 1u << v;
          placed = true;
        }
      if (!placed) {
        classes.push_back({v});
        masks.push_back(1u << v);
      }
    }
    return classes;
  }

  bool try_color(int pos, int k) {
    if (pos == static_cast<int>(order_.size())) return true;
    const int v = order_[pos];
    bool tried_fresh = false;
    for (int c = 0; c < k; ++c) {
      if (classes_[c] == 0u) {
        if (tried_fresh) continue;  // fresh colors are interchangeable
        tried_fresh = true;
      } else if (classes_[c] & adj_[v]) {
        continue;
      }
      colors_[v] = c;
      classes_[c] |= 1u << v;
      if (try_color(pos + 1, k)) return true;
      classes_[c] &= ~(1u << v);
      colors_[v] = -1;
    }
    return false;
  }

  std::vector<std::uint32_t> adj_;
  std::vector<int> order_;
  std::vector<int> colors_;
  std::vector<std::uint32_t> classes_;
};

// Minimum clique cover of the eps-threshold graph restricted to `points`.
std::vector<std::vector<int>> clique_cover(const DistanceSpace& x,
                                           const std::vector<int>& points, double eps) {
  // Split into threshold-graph components first; covers cannot cross them.
  std::vector<int> comp(points.size(), -1);
  int comp_count = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (comp[i] >= 0) continue;
    std::vector<std::size_t> stack{i};
    comp[i] = comp_count;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < points.size(); ++w)
        if (comp[w] < 0 && x.d(points[v], points[w]).value() <= eps) {
          comp[w] = comp_count;
          stack.push_back(w);
        }
    }
    ++comp_count;
  }

  std::vector<std::vector<int>> blocks;
  for (int c = 0; c < comp_count; ++c) {
    std::vector<int> members;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (comp[i] == c) members.push_back(points[i]);
    bool clique = true;
    for (std::size_t i = 0; i < members.size() && clique; ++i)
      for (std::size_t j = i + 1; j < members.size() && clique; ++j)
        if (x.d(members[i], members[j]).value() > eps) clique = false;
    if (clique) {
      blocks.push_back(members);
      continue;
    }
    if (members.size() > 30) throw Error("EngineLimit", "component too large for exact cover");
    // Complement coloring: color classes of the far-pair graph are cliques.
    std::vector<std::uint32_t> far(members.size(), 0u);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        if (i != j && x.d(members[i], members[j]).value() > eps) far[i] |= 1u << j;
    for (const auto& cls : ExactColoring(std::move(far)).solve()) {
      std::vector<int> block;
      for (int v : cls) block.push_back(members[v]);
      std::sort(block.begin(), block.end());
      blocks.push_back(std::move(block));
    }
  }
  return blocks;
}

std::vector<std::vector<int>> maximal_cliques_strict(const DistanceSpace& x, double delta) {
  // Bron-Kerbosch with pivoting on the strict threshold graph.
  const int n = x.size();
  if (n > 62) throw Error("EngineLimit", "too many points for clique enumeration");
  std::vector<std::uint64_t> adj(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && x.d(i, j).value() < delta) adj[i] |= 1ull << j;
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto expand = [&](auto&& self, std::uint64_t cand, std::uint64_t excl) -> void {
    if (!cand && !excl) {
      out.push_back(current);
      return;
    }
    std::uint64_t both = cand | excl;
    int pivot = __builtin_ctzll(both);
    std::uint64_t rest = cand & ~adj[pivot];
    while (rest) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      current.push_back(v);
      self(self, cand & adj[v], excl & adj[v]);
      current.pop_back();
      cand &= ~(1ull << v);
      excl |= 1ull << v;
    }
  };
  expand(expand, n == 64 ? ~0ull : (1ull << n) - 1, 0);
  return out;
}

}  // namespace

bool CoverCertificate::valid_for(const DistanceSpace& x) const {
  std::vector<bool> seen(x.size(), false);
  for (const auto& block : blocks)
    for (int i : block) {
      if (i < 0 || i >= x.size()) return false;
      seen[i] = true;
    }
  for (bool s : seen)
    if (!s) return false;
  for (const auto& block : blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (x.d(block[i], block[j]).value() > epsilon) return false;
  return true;
}

std::pair<int, CoverCertificate> min_cover(const DistanceSpace& x, double eps) {
  if (!(eps > 0.0)) throw Error("InvalidScale", "epsilon must be positive");
  std::vector<int> all(x.size());
  std::iota(all.begin(), all.end(), 0);
  CoverCertificate cert{eps, clique_cover(x, all, eps)};
  return {static_cast<int>(cert.blocks.size()), std::move(cert)};
}

int local_entropy(const DistanceSpace& x, double eps, double delta) {
  if (!(eps > 0.0) || !(delta > 0.0)) throw Error("InvalidScale", "scales must be positive");
  int best = x.size() > 0 ? 1 : 0;
  for (const auto& clique : maximal_cliques_strict(x, delta)) {
    auto blocks = clique_cover(x, clique, eps);
    best = std::max(best, static_cast<int>(blocks.size()));
  }
  return best;
}

BoxDimReport box_dim_estimate(const DistanceSpace& x, const std::vector<double>& scales) {
  if (scales.size() < 2) throw Error("InsufficientScales", "need at least two scales");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0)) throw Error("InvalidScale", "scales must be positive");
    if (i > 0 && scales[i] >= scales[i - 1])
      throw Error("InsufficientScales", "scales must decrease");
  }
  BoxDimReport report{};
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    int count = min_cover(x, scales[i]).first;
    double slope = 0.0;
    if (i > 0) {
      slope = (std::log(static_cast<double>(count)) -
               std::log(static_cast<double>(report.rows[i - 1].count))) /
              (std::log(1.0 / scales[i]) - std::log(1.0 / scales[i - 1]));
    }
    report.rows.push_back({scales[i], count, slope});
    lx.push_back(std::log(1.0 / scales[i]));
    ly.push_back(std::log(static_cast<double>(count)));
  }
  report.upper_slope = -std::numeric_limits<double>::infinity();
  report.lower_slope = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    report.upper_slope = std::max(report.upper_slope, report.rows[i].slope);
    report.lower_slope = std::min(report.lower_slope, report.rows[i].slope);
  }
  const double n = static_cast<double>(lx.size());
  const double sx = std::accumulate(lx.begin(), lx.end(), 0.0);
  const double sy = std::accumulate(ly.begin(), ly.end(), 0.0);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  report.ls_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return report;
}

DistanceSpace power_space(const DistanceSpace& x, int n, PNorm p) {
  if (n < 0) throw Error("IndexOutOfRange", "power must be >= 0");
  std::vector<std::vector<int>> tuples;
  std::vector<int> t(n, 0);
  if (n == 0) {
    tuples.push_back({});
  } else if (x.size() > 0) {
    while (true) {
      tuples.push_back(t);
      int pos = n - 1;
      while (pos >= 0 && t[pos] == x.size() - 1) t[pos--] = 0;
      if (pos < 0) break;
      ++t[pos];
    }
  }
  std::vector<std::string> labels;
  for (const auto& tup : tuples) {
    std::string l = "(";
    for (std::size_t i = 0; i < tup.size(); ++i) {
      if (i) l += ",";
      l += x.label(tup[i]);
    }
    labels.push_back(l + ")");
  }
  const int m = static_cast<int>(tuples.size());
  std::vector<ExtReal> flat(static_cast<std::size_t>(m) * m, ExtReal(0.0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      ExtReal d = lp_tuple_distance(x, tuples[i], tuples[j], p);
      flat[static_cast<std::size_t>(i) * m + j] = d;
      flat[static_cast<std::size_t>(j) * m + i] = d;
    }
  return DistanceSpace::from_trusted(std::move(labels), std::move(flat));
}

EntropyCheckReport functor_entropy_check(const Functor& functor, const DistanceSpace& x,
                                         PNorm p, double eps, double delta) {
  if (!(eps > 0.0) || !(delta > 0.0)) throw Error("InvalidScale", "scales must be positive");
  const int n = std::max(1, functor.degree());
  EntropyCheckReport report{};
  report.epsilon = eps;
  report.delta = delta;
  report.supports_preserving = functor.preserves_supports();

  FunctorMetric metric(functor, x, p);
  DistanceSpace fpx = metric.as_distance_space();
  report.entropy_fpx = min_cover(fpx, eps).first;
  report.carrier_size = static_cast<int>(functor.carrier().size());

  DistanceSpace xn = power_space(x, n, p);
  report.entropy_power = min_cover(xn, eps).first;
  const double root_n = card_root(static_cast<std::size_t>(n), p);
  report.entropy_base_scaled = min_cover(x, eps / root_n).first;

  report.bound_power_ok =
      report.entropy_fpx <= report.carrier_size * report.entropy_power;
  report.bound_base_ok =
      report.entropy_power <=
      static_cast<int>(std::pow(static_cast<double>(report.entropy_base_scaled), n) + 0.5);

  if (report.supports_preserving) {
    const double delta_prime = 2.0 * delta * root_n;
    report.local_fpx = local_entropy(fpx, eps, delta);
    report.local_power = local_entropy(xn, eps, delta_prime);
    report.local_base = local_entropy(x, eps / root_n, delta_prime);
    const double nn = std::pow(static_cast<double>(n), n);
    report.local_power_ok =
        report.local_fpx <= nn * report.carrier_size * report.local_power;
    report.local_base_ok =
        report.local_power <= std::pow(static_cast<double>(report.local_base), n);
  }
  return report;
}

DistanceSpace cantor_space(int level) {
  if (level < 1 || level > 16) throw Error("IndexOutOfRange", "cantor level out of range");
  std::vector<std::vector<double>> points;
  for (unsigned code = 0; code < (1u << level); ++code) {
    double v = 0.0, scale = 1.0;
    for (int i = 0; i < level; ++i) {
      scale /= 3.0;
      if (code & (1u << i)) v += 2.0 * scale;
    }
    points.push_back({v});
  }
  std::sort(points.begin(), points.end());
  return euclidean_import(points);
}

DistanceSpace dyadic_grid(int k) {
  if (k < 1 || k > 16) throw Error("IndexOutOfRange", "grid level out of range");
  std::vector<std::vector<double>> points;
  const double step = std::ldexp(1.0, -k);
  for (int i = 0; i < (1 << k); ++i) points.push_back({i * step});
  return euclidean_import(points);
}

}  // namespace metrize
