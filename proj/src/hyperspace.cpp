#include "metrize/hyperspace.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "metrize/error.hpp"

namespace metrize {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<int> sorted_unique(std::span<const int> v) {
  std::vector<int> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}
}  // namespace

ExtReal SpanningGraph::length(const DistanceSpace& x) const {
  ExtReal total = 0.0;
  for (auto [u, v] : edges) total = total + x.d(u, v);
  return total;
}

bool SpanningGraph::valid_for(const DistanceSpace& x, std::span<const int> a,
                              std::span<const int> b) const {
  std::set<int> vs(vertices.begin(), vertices.end());
  for (int p : a)
    if (!vs.count(p)) return false;
  for (int p : b)
    if (!vs.count(p)) return false;
  for (auto [u, v] : edges)
    if (!vs.count(u) || !vs.count(v)) return false;
  (void)x;
  // Component sweep over the witness graph.
  std::map<int, int> comp;
  int next = 0;
  for (int v : vertices)
    if (!comp.count(v)) {
      std::vector<int> stack{v};
      comp[v] = next;
      while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        for (auto [p, q] : edges) {
          int other = -1;
          if (p == w) other = q;
          if (q == w) other = p;
          if (other >= 0 && !comp.count(other)) {
            comp[other] = next;
            stack.push_back(other);
          }
        }
      }
      ++next;
    }
  std::vector<bool> meets_a(next, false), meets_b(next, false);
  for (int p : a) meets_a[comp.at(p)] = true;
  for (int p : b) meets_b[comp.at(p)] = true;
  for (int c = 0; c < next; ++c)
    if (!meets_a[c] || !meets_b[c]) return false;
  return true;
}

SteinerResult steiner_tree(const DistanceSpace& x, std::span<const int> terminals) {
  auto ts = sorted_unique(terminals);
  if (ts.empty()) throw Error("IndexOutOfRange", "steiner_tree requires terminals");
  for (int t : ts)
    if (t < 0 || t >= x.size()) throw Error("IndexOutOfRange", {t}, "terminal out of range");
  const int k = static_cast<int>(ts.size());
  const int m = x.size();
  if (ts.size() == 1) return {0.0, {}};
  if (k > 14) throw Error("EngineLimit", "too many Steiner terminals");

  const unsigned full = (1u << k) - 1;
  // dp[mask][v]: cheapest tree containing {terminals in mask} + v.
  std::vector<std::vector<double>> dp(full + 1, std::vector<double>(m, kInf));
  // Reconstruction: grow step (other vertex) or merge step (submask).
  struct Choice { int grow = -1; unsigned split = 0; };
  std::vector<std::vector<Choice>> choice(full + 1, std::vector<Choice>(m));

  for (int i = 0; i < k; ++i)
    for (int v = 0; v < m; ++v) dp[1u << i][v] = x.d(v, ts[i]).value();

  for (unsigned mask = 1; mask <= full; ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    const unsigned low = mask & ~(mask - 1);
    std::vector<double> merged(m, kInf);
    std::vector<unsigned> via(m, 0);
    for (unsigned sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;  // keep the lowest terminal on one side once
      if (sub == mask) continue;
      const unsigned rest = mask ^ sub;
      for (int v = 0; v < m; ++v) {
        double cand = dp[sub][v] + dp[rest][v];
        if (cand < merged[v]) {
          merged[v] = cand;
          via[v] = sub;
        }
      }
    }
    // One metric growth pass: chained growth is dominated by the triangle
    // inequality, so a single relaxation is exact here.
    for (int v = 0; v < m; ++v) {
      dp[mask][v] = merged[v];
      choice[mask][v] = {-1, via[v]};
      for (int u = 0; u < m; ++u) {
        double cand = merged[u] + x.d(u, v).value();
        if (cand < dp[mask][v]) {
          dp[mask][v] = cand;
          choice[mask][v] = {u, via[u]};
        }
      }
    }
  }

  const int root = 0;  // tree evaluated at terminal ts[0]
  if (std::isinf(dp[full][ts[root]])) return {ExtReal::infinity(), {}};

  std::set<std::pair<int, int>> edge_set;
  auto add_edge = [&](int u, int v) {
    if (u != v) edge_set.insert(std::minmax(u, v));
  };
  // Unwind the dp decisions.
  std::vector<std::pair<unsigned, int>> stack{{full, ts[root]}};
  while (!stack.empty()) {
    auto [mask, v] = stack.back();
    stack.pop_back();
    if (__builtin_popcount(mask) == 1) {
      int i = __builtin_ctz(mask);
      add_edge(v, ts[i]);
      continue;
    }
    Choice c = choice[mask][v];
    int at = v;
    if (c.grow >= 0) {
      add_edge(c.grow, v);
      at = c.grow;
    }
    stack.push_back({c.split, at});
    stack.push_back({mask ^ c.split, at});
  }
  SteinerResult out;
  out.edges.assign(edge_set.begin(), edge_set.end());
  ExtReal total = 0.0;
  for (auto [u, v] : out.edges) total = total + x.d(u, v);
  out.length = total;
  return out;
}

namespace {

// Shared partition search over a u b: blocks must meet both sides; the block
// cost callback is monotone under adding points, so partial sums prune.
struct PartitionSearch {
  const std::vector<int>& points;
  const std::vector<bool>& in_a;
  const std::vector<bool>& in_b;
  std::function<double(unsigned)> block_cost;

  double best = kInf;
  std::vector<unsigned> best_blocks;
  std::vector<unsigned> blocks;
  std::vector<double> costs;

  void run() { descend(0, 0.0); }

  void descend(std::size_t i, double partial) {
    if (partial >= best) return;
    if (i == points.size()) {
      for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        bool a_ok = false, b_ok = false;
        for (std::size_t pi = 0; pi < points.size(); ++pi)
          if (blocks[bi] & (1u << pi)) {
            a_ok = a_ok || in_a[pi];
            b_ok = b_ok || in_b[pi];
          }
        if (!a_ok || !b_ok) return;
      }
      best = partial;
      best_blocks = blocks;
      return;
    }
    // Restricted-growth enumeration: join an existing block or open a new one.
    for (std::size_t bi = 0; bi <= blocks.size(); ++bi) {
      const bool fresh = bi == blocks.size();
      const unsigned prev_mask = fresh ? 0u : blocks[bi];
      const double prev_cost = fresh ? 0.0 : costs[bi];
      const unsigned mask = prev_mask | (1u << i);
      const double cost = block_cost(mask);
      if (fresh) {
        blocks.push_back(mask);
        costs.push_back(cost);
      } else {
        blocks[bi] = mask;
        costs[bi] = cost;
      }
      descend(i + 1, partial - prev_cost + cost);
      if (fresh) {
        blocks.pop_back();
        costs.pop_back();
      } else {
        blocks[bi] = prev_mask;
        costs[bi] = prev_cost;
      }
    }
  }
};

}  // namespace

HyperD1Result d1_hyperspace(const DistanceSpace& x, std::span<const int> a,
                            std::span<const int> b) {
  auto sa = sorted_unique(a), sb = sorted_unique(b);
  for (int i : sa)
    if (i < 0 || i >= x.size()) throw Error("IndexOutOfRange", {i}, "set index out of range");
  for (int i : sb)
    if (i < 0 || i >= x.size()) throw Error("IndexOutOfRange", {i}, "set index out of range");
  if (sa == sb) {
    SpanningGraph trivial{sa, {}};
    return {0.0, std::move(trivial)};
  }
  if (sa.empty() || sb.empty()) return {ExtReal::infinity(), std::nullopt};

  std::vector<int> points = sorted_unique([&] {
    std::vector<int> u = sa;
    u.insert(u.end(), sb.begin(), sb.end());
    return u;
  }());
  if (points.size() > 12) throw Error("EngineLimit", "|a u b| too large for exact d1");

  std::vector<bool> in_a(points.size()), in_b(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    in_a[i] = std::binary_search(sa.begin(), sa.end(), points[i]);
    in_b[i] = std::binary_search(sb.begin(), sb.end(), points[i]);
  }

  std::map<unsigned, double> steiner_len;
  auto block_cost = [&](unsigned mask) {
    auto it = steiner_len.find(mask);
    if (it != steiner_len.end()) return it->second;
    std::vector<int> terminals;
    for (std::size_t pi = 0; pi < points.size(); ++pi)
      if (mask & (1u << pi)) terminals.push_back(points[pi]);
    double len = steiner_tree(x, terminals).length.value();
    steiner_len.emplace(mask, len);
    return len;
  };

  PartitionSearch search{points, in_a, in_b, block_cost, kInf, {}, {}, {}};
  search.run();
  if (std::isinf(search.best)) return {ExtReal::infinity(), std::nullopt};

  SpanningGraph witness;
  std::set<int> vs;
  std::set<std::pair<int, int>> es;
  for (unsigned mask : search.best_blocks) {
    std::vector<int> terminals;
    for (std::size_t pi = 0; pi < points.size(); ++pi)
      if (mask & (1u << pi)) terminals.push_back(points[pi]);
    auto tree = steiner_tree(x, terminals);
    vs.insert(terminals.begin(), terminals.end());
    for (auto [u, v] : tree.edges) {
      vs.insert(u);
      vs.insert(v);
      es.insert(std::minmax(u, v));
    }
  }
  witness.vertices.assign(vs.begin(), vs.end());
  witness.edges.assign(es.begin(), es.end());
  return {search.best, std::move(witness)};
}

ExtReal d1_upper_mst(const DistanceSpace& x, std::span<const int> a, std::span<const int> b) {
  auto sa = sorted_unique(a), sb = sorted_unique(b);
  if (sa == sb) return 0.0;
  if (sa.empty() || sb.empty()) return ExtReal::infinity();
  std::vector<int> points = sorted_unique([&] {
    std::vector<int> u = sa;
    u.insert(u.end(), sb.begin(), sb.end());
    return u;
  }());
  if (points.size() > 16) throw Error("EngineLimit", "|a u b| too large");

  std::vector<bool> in_a(points.size()), in_b(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    in_a[i] = std::binary_search(sa.begin(), sa.end(), points[i]);
    in_b[i] = std::binary_search(sb.begin(), sb.end(), points[i]);
  }

  auto mst_cost = [&](unsigned mask) {
    std::vector<int> vs;
    for (std::size_t pi = 0; pi < points.size(); ++pi)
      if (mask & (1u << pi)) vs.push_back(points[pi]);
    if (vs.size() <= 1) return 0.0;
    std::vector<double> key(vs.size(), kInf);
    std::vector<bool> used(vs.size(), false);
    key[0] = 0.0;
    double total = 0.0;
    for (std::size_t step = 0; step < vs.size(); ++step) {
      int pick = -1;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (!used[i] && (pick < 0 || key[i] < key[pick])) pick = static_cast<int>(i);
      if (std::isinf(key[pick])) return kInf;
      used[pick] = true;
      total += key[pick];
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (!used[i]) key[i] = std::min(key[i], x.d(vs[pick], vs[i]).value());
    }
    return total;
  };

  PartitionSearch search{points, in_a, in_b, mst_cost, kInf, {}, {}, {}};
  search.run();
  return std::isinf(search.best) ? ExtReal::infinity() : ExtReal(search.best);
}

namespace {

using IntSet = std::vector<int>;  // sorted unique

IntSet set_minus(const IntSet& s, int v) {
  IntSet out;
  for (int p : s)
    if (p != v) out.push_back(p);
  return out;
}

IntSet set_plus(const IntSet& s, int v) {
  IntSet out = s;
  if (!std::binary_search(out.begin(), out.end(), v)) {
    out.push_back(v);
    std::sort(out.begin(), out.end());
  }
  return out;
}

bool contains(const IntSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

// A full-domain hyperspace chain step built from an enumeration of `base`
// with `swap_at` appended last; `from` maps it to from_last, `to` to to_last.
ChainStep swap_step(const IntSet& base, int swap_at, int from_last, int to_last) {
  std::vector<int> order;
  for (int p : base)
    if (p != swap_at) order.push_back(p);
  order.push_back(swap_at);
  ChainStep step;
  std::vector<int> domain(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) domain[i] = static_cast<int>(i);
  step.carrier = Element::set(domain);
  step.from = order;
  step.to = order;
  step.from.back() = from_last;
  step.to.back() = to_last;
  return step;
}

void augment_with_fixed_point(std::vector<ChainStep>& chain, int v) {
  for (auto& step : chain) {
    std::vector<int> domain = step.carrier.idx;
    domain.push_back(static_cast<int>(domain.size()));
    step.carrier = Element::set(domain);
    step.from.push_back(v);
    step.to.push_back(v);
  }
}

struct MiniGraph {
  IntSet vertices;
  std::vector<std::pair<int, int>> edges;

  bool valid_for(const IntSet& a, const IntSet& b) const {
    SpanningGraph g{vertices, edges};
    // Component check does not need the space itself.
    static const DistanceSpace dummy = DistanceSpace::validate({{ExtReal(0.0)}});
    return g.valid_for(dummy, a, b);
  }

  int degree(int v) const {
    int d = 0;
    for (auto [p, q] : edges) d += (p == v) + (q == v);
    return d;
  }

  MiniGraph without_vertex(int v) const {
    MiniGraph out;
    for (int p : vertices)
      if (p != v) out.vertices.push_back(p);
    for (auto e : edges)
      if (e.first != v && e.second != v) out.edges.push_back(e);
    return out;
  }

  IntSet component_of(int v) const {
    IntSet comp{v};
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (auto [p, q] : edges) {
        int other = p == w ? q : (q == w ? p : -1);
        if (other >= 0 && !contains(comp, other)) {
          comp = set_plus(comp, other);
          stack.push_back(other);
        }
      }
    }
    return comp;
  }
};

MiniGraph drop_isolated_outsiders(MiniGraph g, const IntSet& a, const IntSet& b) {
  IntSet keep;
  for (int v : g.vertices)
    if (g.degree(v) > 0 || contains(a, v) || contains(b, v)) keep.push_back(v);
  g.vertices = keep;
  return g;
}

// Greedy minimalization: drop any edge whose removal (together with newly
// isolated vertices outside a u b) keeps the graph valid. Leaves a forest
// whose pendant vertices lie in a u b.
MiniGraph minimalize(MiniGraph g, const IntSet& a, const IntSet& b) {
  g = drop_isolated_outsiders(std::move(g), a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      MiniGraph trial = g;
      trial.edges.erase(trial.edges.begin() + static_cast<long>(e));
      trial = drop_isolated_outsiders(std::move(trial), a, b);
      if (trial.valid_for(a, b)) {
        g = std::move(trial);
        changed = true;
        break;
      }
    }
  }
  return g;
}

std::vector<ChainStep> peel(const DistanceSpace& x, const IntSet& a, const IntSet& b,
                            MiniGraph g);

std::vector<ChainStep> peel_minimal(const DistanceSpace& x, const IntSet& a, const IntSet& b,
                                    MiniGraph g) {
  if (a == b) {
    // Trivial certificate: one stationary step enumerating a.
    ChainStep step;
    std::vector<int> domain(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) domain[i] = static_cast<int>(i);
    step.carrier = Element::set(domain);
    step.from = a;
    step.to = a;
    return {step};
  }
  // Pick the smallest pendant vertex of a nontrivial component; the graph is
  // minimal, so such a vertex exists and lies in a u b.
  int v = -1, u = -1;
  for (int cand : g.vertices)
    if (g.degree(cand) == 1) {
      v = cand;
      for (auto [p, q] : g.edges) {
        if (p == v) u = q;
        if (q == v) u = p;
      }
      break;
    }
  if (v < 0) throw Error("InternalError", "no pendant vertex in a minimal witness graph");

  const bool va = contains(a, v), vb = contains(b, v);
  if (vb && !va) {
    IntSet b2 = set_plus(set_minus(b, v), u);
    auto chain = peel(x, a, b2, g.without_vertex(v));
    // b2 -> b: send the padded copy of u to v.
    chain.push_back(swap_step(b, v, u, v));
    return chain;
  }
  if (va && !vb) {
    IntSet a2 = set_plus(set_minus(a, v), u);
    auto chain = peel(x, a2, b, g.without_vertex(v));
    std::vector<ChainStep> out{swap_step(a, v, v, u)};
    out.insert(out.end(), chain.begin(), chain.end());
    return out;
  }
  // v in a n b.
  IntSet comp = g.component_of(v);
  bool meets_a = false, meets_b = false;
  for (int w : comp) {
    if (w != v && contains(a, w)) meets_a = true;
    if (w != v && contains(b, w)) meets_b = true;
  }
  IntSet a2 = set_minus(a, v), b2 = set_minus(b, v);
  if (meets_a && meets_b) {
    auto chain = peel(x, a2, b2, g.without_vertex(v));
    augment_with_fixed_point(chain, v);
    return chain;
  }
  if (!meets_a && !meets_b) {
    MiniGraph rest = g;
    for (int w : comp) rest = rest.without_vertex(w);
    auto chain = peel(x, a2, b2, rest);
    augment_with_fixed_point(chain, v);
    return chain;
  }
  if (meets_a) {  // component misses b beyond v
    IntSet b3 = set_plus(b2, u);
    auto chain = peel(x, a2, b3, g.without_vertex(v));
    augment_with_fixed_point(chain, v);  // links a to b3 + {v} = b u {u}
    chain.push_back(swap_step(b, u, u, v));
    return chain;
  }
  // component misses a beyond v
  IntSet a3 = set_plus(a2, u);
  auto chain = peel(x, a3, b2, g.without_vertex(v));
  augment_with_fixed_point(chain, v);  // links a u {u} to b
  std::vector<ChainStep> out{swap_step(a, u, v, u)};
  out.insert(out.end(), chain.begin(), chain.end());
  return out;
}

std::vector<ChainStep> peel(const DistanceSpace& x, const IntSet& a, const IntSet& b,
                            MiniGraph g) {
  return peel_minimal(x, a, b, minimalize(std::move(g), a, b));
}

}  // namespace

std::vector<ChainStep> chain_from_graph(const DistanceSpace& x, std::vector<int> a,
                                        std::vector<int> b, SpanningGraph graph) {
  IntSet sa = sorted_unique(a), sb = sorted_unique(b);
  MiniGraph g;
  g.vertices = sorted_unique(graph.vertices);
  for (auto [u, v] : graph.edges)
    if (u != v) g.edges.push_back(std::minmax(u, v));
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  if (!g.valid_for(sa, sb))
    throw Error("InvalidWitness", "graph is not a spanning witness for (a, b)");
  return peel(x, sa, sb, std::move(g));
}

}  // namespace metrize
