#include "metrize/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace metrize {

DistanceSpace random_space(Rng& rng, int max_size, bool allow_infinite) {
  const int n = rng.range(2, std::max(2, max_size));
  const bool split = allow_infinite && n >= 2 && rng.chance(0.35);
  const int first = split ? rng.range(1, n - 1) : n;

  std::vector<std::vector<double>> pts(n, std::vector<double>(2));
  for (auto& p : pts) {
    p[0] = rng.uniform(0.0, 10.0);
    p[1] = rng.uniform(0.0, 10.0);
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));

  std::vector<ExtReal> flat(static_cast<std::size_t>(n) * n, ExtReal(0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ExtReal d = ExtReal::infinity();
      if ((i < first) == (j < first)) {
        double dx = pts[i][0] - pts[j][0], dy = pts[i][1] - pts[j][1];
        d = std::sqrt(dx * dx + dy * dy);
      }
      flat[static_cast<std::size_t>(i) * n + j] = d;
      flat[static_cast<std::size_t>(j) * n + i] = d;
    }
  return DistanceSpace::from_trusted(std::move(labels), std::move(flat));
}

std::vector<int> random_subset(Rng& rng, int n, int max_card, bool allow_empty) {
  const int cap = std::min(n, max_card);
  const int lo = allow_empty ? 0 : 1;
  const int size = rng.range(lo, std::max(lo, cap));
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < size; ++i) {
    int j = rng.range(i, n - 1);
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> out(pool.begin(), pool.begin() + size);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> random_tuple(Rng& rng, int n, int len) {
  std::vector<int> out(len);
  for (int& v : out) v = rng.below(n);
  return out;
}

FinSupportFunction random_group_function(Rng& rng, const DistanceSpace& x, int modulus) {
  FinSupportFunction phi = FinSupportFunction::zero(modulus, x.size());
  for (int& v : phi.values)
    if (rng.chance(0.5)) v = rng.range(1, modulus - 1);
  return phi;
}

FinSupportFunction random_zero_sum_function(Rng& rng, const DistanceSpace& x, int modulus) {
  FinSupportFunction phi = random_group_function(rng, x, modulus);
  int total = 0;
  for (int i = 0; i + 1 < x.size(); ++i) total += phi.values[i];
  if (x.size() > 0)
    phi.values[x.size() - 1] = ((modulus - total % modulus) % modulus + modulus) % modulus;
  return phi.normalized();
}

}  // namespace metrize
