#include "metrize/functor_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

namespace metrize {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::vector<int>> all_tuples(int ground, int len) {
  std::vector<std::vector<int>> out;
  if (len == 0) {
    out.push_back({});
    return out;
  }
  if (ground == 0) return out;  // no tuples into an empty set
  std::vector<int> t(len, 0);
  while (true) {
    out.push_back(t);
    int pos = len - 1;
    while (pos >= 0 && t[pos] == ground - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

}  // namespace

std::vector<Element> enumerate_elements(const Functor& functor, const DistanceSpace& x) {
  if (functor.degree() > 0 && x.size() == 0)
    throw Error("EmptySpace", "cannot enumerate a positive-degree functor over an empty space");
  const int n = std::max(1, functor.degree());
  std::vector<Element> out;
  for (const auto& c : functor.carrier())
    for (const auto& t : all_tuples(x.size(), functor.degree() == 0 ? 0 : n))
      out.push_back(functor.transport(c, t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FunctorMetric::FunctorMetric(const Functor& functor, const DistanceSpace& x, PNorm p,
                             std::uint64_t edge_budget)
    : functor_(functor), x_(x), p_(p), n_(std::max(1, functor.degree())) {
  carrier_ = functor_.carrier();
  elements_ = enumerate_elements(functor_, x_);
  adj_.resize(elements_.size());
  if (functor_.degree() == 0) return;  // no chains move anything: distinct => inf

  tuples_ = all_tuples(x_.size(), n_);
  const std::uint64_t t = tuples_.size();
  if (!carrier_.empty() && t * t * carrier_.size() > edge_budget)
    throw Error("EngineLimit", "edge enumeration exceeds the configured budget");

  std::map<Element, int> node_of;
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i) node_of[elements_[i]] = i;

  // One edge per unordered node pair, keeping the cheapest witness triple;
  // ties keep the first in (carrier, f, g) enumeration order.
  std::map<std::pair<int, int>, int> slot;
  for (int c = 0; c < static_cast<int>(carrier_.size()); ++c) {
    for (int fi = 0; fi < static_cast<int>(tuples_.size()); ++fi) {
      const Element u = functor_.transport(carrier_[c], tuples_[fi]);
      const int un = node_of.at(u);
      for (int gi = fi + 1; gi < static_cast<int>(tuples_.size()); ++gi) {
        const Element v = functor_.transport(carrier_[c], tuples_[gi]);
        if (u == v) continue;
        ExtReal w = lp_tuple_distance(x_, tuples_[fi], tuples_[gi], p_);
        if (!w.finite()) continue;
        const int vn = node_of.at(v);
        const auto key = std::minmax(un, vn);
        auto it = slot.find(key);
        if (it == slot.end()) {
          slot.emplace(key, static_cast<int>(edges_.size()));
          edges_.push_back({un, vn, w.value(), c, fi, gi});
        } else if (w.value() < edges_[it->second].w) {
          edges_[it->second] = {un, vn, w.value(), c, fi, gi};
        }
      }
    }
  }
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    adj_[edges_[e].u].push_back({e, edges_[e].v});
    adj_[edges_[e].v].push_back({e, edges_[e].u});
  }
}

int FunctorMetric::index_of(const Element& a) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), a);
  if (it == elements_.end() || *it != a)
    throw Error("UnknownElement", "element " + to_string(a) + " is not in FX");
  return static_cast<int>(it - elements_.begin());
}

FunctorMetric::Settled FunctorMetric::dijkstra(int source) const {
  Settled s;
  s.dist.assign(elements_.size(), kInf);
  s.parent_edge.assign(elements_.size(), -1);
  s.parent_forward.assign(elements_.size(), true);
  s.dist[source] = 0.0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  queue.push({0.0, source});
  std::vector<bool> done(elements_.size(), false);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (done[v]) continue;
    done[v] = true;
    for (auto [e, w] : adj_[v]) {
      double cand = d + edges_[e].w;
      if (cand < s.dist[w]) {
        s.dist[w] = cand;
        s.parent_edge[w] = e;
        s.parent_forward[w] = edges_[e].u == v;
        queue.push({cand, w});
      }
    }
  }
  return s;
}

ExtReal FunctorMetric::distance(const Element& a, const Element& b) const {
  return distance_with_chain(a, b).distance;
}

DistanceResult FunctorMetric::distance_with_chain(const Element& a, const Element& b) const {
  const int an = index_of(a), bn = index_of(b);
  if (an == bn) return {0.0, std::vector<ChainStep>{}};
  Settled s = dijkstra(an);
  if (std::isinf(s.dist[bn])) return {ExtReal::infinity(), std::nullopt};
  std::vector<ChainStep> chain;
  for (int v = bn; v != an;) {
    const Edge& e = edges_[s.parent_edge[v]];
    bool fwd = s.parent_forward[v];
    chain.push_back({carrier_[e.carrier], fwd ? tuple(e.from) : tuple(e.to),
                     fwd ? tuple(e.to) : tuple(e.from)});
    v = fwd ? e.u : e.v;
  }
  std::reverse(chain.begin(), chain.end());
  return {s.dist[bn], std::move(chain)};
}

std::vector<std::vector<ExtReal>> FunctorMetric::distance_matrix() const {
  const int m = static_cast<int>(elements_.size());
  std::vector<std::vector<ExtReal>> out(m, std::vector<ExtReal>(m, ExtReal(0.0)));
  for (int i = 0; i < m; ++i) {
    Settled s = dijkstra(i);
    for (int j = i + 1; j < m; ++j) {
      ExtReal d = std::isinf(s.dist[j]) ? ExtReal::infinity() : ExtReal(s.dist[j]);
      out[i][j] = d;
      out[j][i] = d;
    }
  }
  return out;
}

DistanceSpace FunctorMetric::as_distance_space() const {
  auto m = distance_matrix();
  std::vector<std::string> labels;
  labels.reserve(elements_.size());
  for (const auto& e : elements_) labels.push_back(to_string(e));
  std::vector<ExtReal> flat;
  flat.reserve(elements_.size() * elements_.size());
  for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
  return DistanceSpace::from_trusted(std::move(labels), std::move(flat));
}

DistanceResult dp_distance(const Functor& functor, const DistanceSpace& x, PNorm p,
                           const Element& a, const Element& b) {
  return FunctorMetric(functor, x, p).distance_with_chain(a, b);
}

ExtReal chain_oracle(const Functor& functor, const DistanceSpace& x, PNorm p,
                     const Element& a, const Element& b, int max_len,
                     std::uint64_t budget) {
  const auto elements = enumerate_elements(functor, x);
  auto find = [&](const Element& e) {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || *it != e)
      throw Error("UnknownElement", "element " + to_string(e) + " is not in FX");
    return static_cast<int>(it - elements.begin());
  };
  const int an = find(a), bn = find(b);
  if (an == bn) return 0.0;
  if (functor.degree() == 0) return ExtReal::infinity();

  const int m = static_cast<int>(elements.size());
  const int n = std::max(1, functor.degree());
  const auto carrier = functor.carrier();
  const auto tuples = all_tuples(x.size(), n);

  // Per-carrier step-cost tables M_c[u][v] = min { d^p(f,g) : Ff(c)=u, Fg(c)=v }.
  std::vector<std::vector<double>> step(carrier.size(),
                                        std::vector<double>(static_cast<std::size_t>(m) * m, kInf));
  for (int c = 0; c < static_cast<int>(carrier.size()); ++c) {
    std::vector<int> node(tuples.size());
    for (int ti = 0; ti < static_cast<int>(tuples.size()); ++ti)
      node[ti] = find(functor.transport(carrier[c], tuples[ti]));
    for (int fi = 0; fi < static_cast<int>(tuples.size()); ++fi)
      for (int gi = 0; gi < static_cast<int>(tuples.size()); ++gi) {
        ExtReal w = lp_tuple_distance(x, tuples[fi], tuples[gi], p);
        if (!w.finite()) continue;
        double& cell = step[c][static_cast<std::size_t>(node[fi]) * m + node[gi]];
        cell = std::min(cell, w.value());
      }
  }

  // Depth-first enumeration of chains a = v_0 -> v_1 -> ... -> v_k = b over
  // the step tables, carrier elements free to repeat. Revisiting an element
  // never helps (step costs are nonnegative and cutting the loop out of a
  // chain keeps it linking), so only element-simple chains are walked and
  // max_len >= |FX| - 1 already gives the exact infimum.
  double best = kInf;
  std::uint64_t work = 0;
  std::vector<bool> visited(m, false);
  visited[an] = true;
  auto dfs = [&](auto&& self, int v, double cost, int depth) -> void {
    if (v == bn) {
      best = std::min(best, cost);
      return;  // extending past the target cannot improve a nonnegative sum
    }
    if (depth == max_len) return;
    for (int w = 0; w < m; ++w) {
      if (visited[w]) continue;
      work += carrier.size();
      if (work > budget) throw Error("BudgetExceeded", "chain oracle budget exhausted");
      double move = kInf;
      for (int c = 0; c < static_cast<int>(carrier.size()); ++c)
        move = std::min(move, step[c][static_cast<std::size_t>(v) * m + w]);
      if (cost + move >= best) continue;
      visited[w] = true;
      self(self, w, cost + move, depth + 1);
      visited[w] = false;
    }
  };
  dfs(dfs, an, 0.0, 0);
  return std::isinf(best) ? ExtReal::infinity() : ExtReal(best);
}

std::pair<ExtReal, ExtReal> induced_map_lipschitz(const Functor& functor,
                                                  const DistanceSpace& x,
                                                  const DistanceSpace& y,
                                                  std::span<const int> map, PNorm p) {
  if (static_cast<int>(map.size()) != x.size())
    throw Error("LengthMismatch", "index map must be total on X");
  for (int i : map)
    if (i < 0 || i >= y.size()) throw Error("IndexOutOfRange", {i}, "map image out of range");

  auto ratio_sup = [](auto&& dist_x, auto&& dist_y, int count) {
    ExtReal sup = 0.0;
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j) {
        ExtReal dx = dist_x(i, j), dy = dist_y(i, j);
        if (!dx.finite()) continue;
        if (dx == ExtReal(0.0)) {
          if (dy > ExtReal(0.0)) return ExtReal::infinity();
          continue;
        }
        if (!dy.finite()) return ExtReal::infinity();
        sup = ext_max(sup, dy.value() / dx.value());
      }
    return sup;
  };

  ExtReal lip_f = ratio_sup([&](int i, int j) { return x.d(i, j); },
                            [&](int i, int j) { return y.d(map[i], map[j]); }, x.size());

  FunctorMetric mx(functor, x, p), my(functor, y, p);
  auto dmx = mx.distance_matrix();
  auto dmy = my.distance_matrix();
  std::vector<int> image;
  image.reserve(mx.elements().size());
  for (const auto& e : mx.elements()) image.push_back(my.index_of(functor.transport(e, map)));
  ExtReal lip_ff = ratio_sup([&](int i, int j) { return dmx[i][j]; },
                             [&](int i, int j) { return dmy[image[i]][image[j]]; },
                             static_cast<int>(mx.elements().size()));
  return {lip_f, lip_ff};
}

bool chain_is_valid(const Functor& functor, const DistanceSpace& x, PNorm p,
                    const Element& a, const Element& b,
                    const std::vector<ChainStep>& chain, ExtReal expected_cost,
                    double tol) {
  if (chain.empty()) return a == b && ext_close(expected_cost, 0.0, tol);
  if (functor.transport(chain.front().carrier, chain.front().from) != a) return false;
  if (functor.transport(chain.back().carrier, chain.back().to) != b) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (functor.transport(chain[i].carrier, chain[i].to) !=
        functor.transport(chain[i + 1].carrier, chain[i + 1].from))
      return false;
  ExtReal cost = 0.0;
  for (const auto& step : chain)
    cost = cost + lp_tuple_distance(x, step.from, step.to, p);
  return ext_close(cost, expected_cost, tol);
}

}  // namespace metrize
