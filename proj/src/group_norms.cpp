#include "metrize/group_norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "metrize/error.hpp"

namespace metrize {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

int mod(int v, int m) {
  int r = v % m;
  return r < 0 ? r + m : r;
}
}  // namespace

FinSupportFunction FinSupportFunction::zero(int modulus, int size) {
  if (modulus < 2) throw Error("ModulusMismatch", "modulus must be >= 2");
  return {modulus, std::vector<int>(size, 0)};
}

FinSupportFunction FinSupportFunction::normalized() const {
  FinSupportFunction out = *this;
  for (int& v : out.values) v = mod(v, modulus);
  return out;
}

std::vector<int> FinSupportFunction::support() const {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(values.size()); ++i)
    if (mod(values[i], modulus) != 0) s.push_back(i);
  return s;
}

FinSupportFunction operator+(const FinSupportFunction& a, const FinSupportFunction& b) {
  if (a.modulus != b.modulus || a.values.size() != b.values.size())
    throw Error("ModulusMismatch", "operands live in different groups");
  FinSupportFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = mod(out.values[i] + b.values[i], out.modulus);
  return out;
}

FinSupportFunction operator-(const FinSupportFunction& a, const FinSupportFunction& b) {
  if (a.modulus != b.modulus || a.values.size() != b.values.size())
    throw Error("ModulusMismatch", "operands live in different groups");
  FinSupportFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = mod(out.values[i] - b.values[i], out.modulus);
  return out;
}

namespace {

void check_shape(const DistanceSpace& x, const FinSupportFunction& phi) {
  if (phi.modulus < 2) throw Error("ModulusMismatch", "modulus must be >= 2");
  if (static_cast<int>(phi.values.size()) != x.size())
    throw Error("ModulusMismatch", "value table does not match the space");
}

// Mixed-radix encoding of states phi : positions -> Z_m.
struct StateCodec {
  int m;
  int slots;

  std::uint64_t capacity() const {
    std::uint64_t c = 1;
    for (int i = 0; i < slots; ++i) {
      if (c > (1ULL << 40)) return c;  // far beyond any supported size; avoid overflow
      c *= static_cast<std::uint64_t>(m);
    }
    return c;
  }

  std::uint64_t encode(const std::vector<int>& values) const {
    std::uint64_t code = 0;
    for (int i = slots - 1; i >= 0; --i) code = code * m + values[i];
    return code;
  }

  std::vector<int> decode(std::uint64_t code) const {
    std::vector<int> values(slots);
    for (int i = 0; i < slots; ++i) {
      values[i] = static_cast<int>(code % m);
      code /= m;
    }
    return values;
  }
};

struct Move {
  int g, plus, minus;
  double cost;
};

// Dijkstra from the zero state to `target` over the given dipole moves,
// expanding only reachable states. Returns the distance and, optionally,
// the move sequence.
std::pair<double, std::vector<Dipole>> dipole_shortest_path(
    const StateCodec& codec, const std::vector<Move>& moves,
    const std::vector<int>& target, bool want_moves) {
  if (codec.capacity() > 1'000'000)
    throw Error("EngineLimit", "state space m^|X| exceeds the supported size");
  const std::uint64_t goal = codec.encode(target);
  const std::uint64_t start = 0;
  std::unordered_map<std::uint64_t, double> dist;
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> parent;  // state -> (prev, move)
  using Item = std::pair<double, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  dist[start] = 0.0;
  queue.push({0.0, start});
  while (!queue.empty()) {
    auto [d, s] = queue.top();
    queue.pop();
    if (d > dist.at(s)) continue;
    if (s == goal) break;
    std::vector<int> values = codec.decode(s);
    for (int mi = 0; mi < static_cast<int>(moves.size()); ++mi) {
      const Move& mv = moves[mi];
      std::vector<int> next = values;
      next[mv.plus] = mod(next[mv.plus] + mv.g, codec.m);
      next[mv.minus] = mod(next[mv.minus] - mv.g, codec.m);
      const std::uint64_t code = codec.encode(next);
      const double nd = d + mv.cost;
      auto it = dist.find(code);
      if (it == dist.end() || nd < it->second) {
        dist[code] = nd;
        if (want_moves) parent[code] = {s, mi};
        queue.push({nd, code});
      }
    }
  }
  auto it = dist.find(goal);
  if (it == dist.end() || std::isinf(it->second)) return {kInf, {}};
  std::vector<Dipole> seq;
  if (want_moves) {
    for (std::uint64_t s = goal; s != start;) {
      auto [prev, mi] = parent.at(s);
      seq.push_back({moves[mi].g, moves[mi].plus, moves[mi].minus});
      s = prev;
    }
    std::reverse(seq.begin(), seq.end());
  }
  return {it->second, std::move(seq)};
}

std::vector<Move> all_dipole_moves(const DistanceSpace& x, const std::vector<int>& positions,
                                   const std::vector<int>& gs) {
  std::vector<Move> moves;
  for (int i = 0; i < static_cast<int>(positions.size()); ++i)
    for (int j = 0; j < static_cast<int>(positions.size()); ++j) {
      if (i == j) continue;
      ExtReal d = x.d(positions[i], positions[j]);
      if (!d.finite()) continue;  // moves across components are infeasible
      for (int g : gs) moves.push_back({g, i, j, d.value()});
    }
  return moves;
}

}  // namespace

MembershipReport classify(const DistanceSpace& x, const FinSupportFunction& phi) {
  check_shape(x, phi);
  std::vector<int> comp_sum(x.component_count(), 0);
  for (int i = 0; i < x.size(); ++i)
    comp_sum[x.component_ids()[i]] = mod(comp_sum[x.component_ids()[i]] + phi.values[i], phi.modulus);
  int total = 0;
  bool per_component = true;
  for (int s : comp_sum) {
    total = mod(total + s, phi.modulus);
    per_component = per_component && s == 0;
  }
  return {total == 0, per_component};
}

GroupDistResult d1_group(const DistanceSpace& x, const FinSupportFunction& a,
                         const FinSupportFunction& b) {
  check_shape(x, a);
  check_shape(x, b);
  if (a.modulus != b.modulus) throw Error("ModulusMismatch", "moduli differ");
  FinSupportFunction diff = (a - b).normalized();
  if (!classify(x, diff).in_f00) return {ExtReal::infinity(), std::nullopt};

  std::vector<int> positions(x.size());
  std::iota(positions.begin(), positions.end(), 0);
  std::vector<int> gs;
  for (int g = 1; g < a.modulus; ++g) gs.push_back(g);
  StateCodec codec{a.modulus, x.size()};
  auto [value, seq] =
      dipole_shortest_path(codec, all_dipole_moves(x, positions, gs), diff.values, true);
  if (std::isinf(value)) return {ExtReal::infinity(), std::nullopt};
  return {value, std::move(seq)};
}

ExtReal norm_restricted(const DistanceSpace& x, const FinSupportFunction& phi) {
  check_shape(x, phi);
  FinSupportFunction f = phi.normalized();
  if (!classify(x, f).in_f0) return ExtReal::infinity();
  std::vector<int> supp = f.support();
  if (supp.empty()) return 0.0;
  std::vector<int> target;
  target.reserve(supp.size());
  for (int i : supp) target.push_back(f.values[i]);
  std::vector<int> gs;
  for (int g = 1; g < f.modulus; ++g) gs.push_back(g);
  StateCodec codec{f.modulus, static_cast<int>(supp.size())};
  auto [value, seq] =
      dipole_shortest_path(codec, all_dipole_moves(x, supp, gs), target, false);
  return std::isinf(value) ? ExtReal::infinity() : ExtReal(value);
}

MatchingResult boolean_matching_norm(const DistanceSpace& x, const FinSupportFunction& phi) {
  check_shape(x, phi);
  if (phi.modulus != 2) throw Error("ModulusMismatch", "boolean norm requires modulus 2");
  std::vector<int> supp = phi.support();
  if (supp.size() % 2 != 0)
    throw Error("OddSupport", "phi is not in F0: odd support size");
  const int s = static_cast<int>(supp.size());
  if (s > 22) throw Error("EngineLimit", "support too large for the subset DP");
  if (s == 0) return {0.0, {}};

  const unsigned full = (1u << s) - 1;
  std::vector<double> dp(full + 1, kInf);
  std::vector<int> pick(full + 1, -1);
  dp[0] = 0.0;
  for (unsigned mask = 1; mask <= full; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    const int i = __builtin_ctz(mask);
    for (int j = i + 1; j < s; ++j) {
      if (!(mask & (1u << j))) continue;
      const unsigned rest = mask & ~(1u << i) & ~(1u << j);
      double cand = dp[rest] + x.d(supp[i], supp[j]).value();
      if (cand < dp[mask]) {
        dp[mask] = cand;
        pick[mask] = j;
      }
    }
  }
  if (std::isinf(dp[full])) return {ExtReal::infinity(), {}};
  MatchingResult out{dp[full], {}};
  for (unsigned mask = full; mask;) {
    const int i = __builtin_ctz(mask);
    const int j = pick[mask];
    out.pairs.emplace_back(supp[i], supp[j]);
    mask &= ~(1u << i) & ~(1u << j);
  }
  return out;
}

ExtReal graev_distance(const DistanceSpace& x, const FinSupportFunction& a,
                       const FinSupportFunction& b, int g) {
  check_shape(x, a);
  check_shape(x, b);
  if (a.modulus != b.modulus) throw Error("ModulusMismatch", "moduli differ");
  if (std::gcd(mod(g, a.modulus), a.modulus) != 1)
    throw Error("NotAGenerator", std::to_string(g) + " does not generate Z_" +
                                     std::to_string(a.modulus));
  FinSupportFunction diff = (a - b).normalized();
  if (!classify(x, diff).in_f00) return ExtReal::infinity();
  std::vector<int> positions(x.size());
  std::iota(positions.begin(), positions.end(), 0);
  StateCodec codec{a.modulus, x.size()};
  auto [value, seq] = dipole_shortest_path(
      codec, all_dipole_moves(x, positions, {mod(g, a.modulus)}), diff.values, false);
  return std::isinf(value) ? ExtReal::infinity() : ExtReal(value);
}

ExtReal pcheck_distance(const DistanceSpace& x, const FinSupportFunction& a,
                        const FinSupportFunction& b) {
  check_shape(x, a);
  check_shape(x, b);
  if (a.modulus != b.modulus) throw Error("ModulusMismatch", "moduli differ");
  if (!classify(x, a).in_f0 || !classify(x, b).in_f0)
    throw Error("NotInF0", "pcheck_distance requires elements of F0");
  return classify(x, a - b).in_f00 ? ExtReal(0.0) : ExtReal::infinity();
}

}  // namespace metrize
