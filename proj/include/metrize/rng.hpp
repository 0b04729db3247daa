#pragma once

#include <cstdint>
#include <random>

namespace metrize {

// Deterministic random source. mt19937_64 output is fully specified by the
// standard; the derived draws below avoid std distributions, whose results
// are implementation-defined, so seeded runs are reproducible across
// platforms and library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double uniform01() {  // in [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform in {0, ..., n-1}, n >= 1.
  int below(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

  // Uniform in {lo, ..., hi} inclusive.
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool chance(double p) { return uniform01() < p; }

  // Stable per-task seed derived from a base seed and stream/trial indices.
  static std::uint64_t derive(std::uint64_t base, std::uint64_t stream, std::uint64_t trial) {
    std::uint64_t h = base;
    for (std::uint64_t v : {stream + 1, trial + 1}) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
    }
    return h;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace metrize
