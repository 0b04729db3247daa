#include "metrize/property_suite.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

#include "metrize/entropy.hpp"
#include "metrize/error.hpp"
#include "metrize/functor_metric.hpp"
#include "metrize/generators.hpp"
#include "metrize/group_norms.hpp"
#include "metrize/hyperspace.hpp"
#include "metrize/tight_span.hpp"

namespace metrize {

namespace {

constexpr double kTol = 1e-9;

// a <= b + tol on [0, inf].
bool ext_le(ExtReal a, ExtReal b, double tol = kTol) {
  if (!b.finite()) return true;
  if (!a.finite()) return false;
  return a.value() <= b.value() + tol;
}

std::string fmt(ExtReal v) {
  if (!v.finite()) return "inf";
  std::ostringstream os;
  os.precision(12);
  os << v.value();
  return os.str();
}

using Failure = std::optional<std::string>;
using Check = std::function<Failure(Rng&, const SuiteConfig&)>;

struct Property {
  std::string name;
  Check check;
};

std::vector<std::unique_ptr<Functor>> standard_functors() {
  std::vector<std::unique_ptr<Functor>> fs;
  fs.push_back(make_power_functor(2));
  fs.push_back(make_capped_hyperspace(2));
  fs.push_back(make_nonempty_pairs());
  fs.push_back(make_symdiff_pairs());
  return fs;
}

PNorm random_pnorm(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return PNorm::one();
    case 1: return PNorm(1.5);
    case 2: return PNorm::two();
    default: return PNorm::infinity();
  }
}

Element random_element(Rng& rng, const std::vector<Element>& pool) {
  return pool[rng.below(static_cast<int>(pool.size()))];
}

std::vector<int> quotient_map(const DistanceSpace& x) { return x.component_ids(); }

std::vector<ExtReal> finite_distances(const DistanceSpace& x) {
  std::vector<ExtReal> out;
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j)
      if (x.d(i, j).finite() && x.d(i, j) > ExtReal(0.0)) out.push_back(x.d(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

// Brute-force disjoint-pair norm: pairs (x, y) with phi(y) = -phi(x) tiling
// the support exactly.
double cap_norm(const DistanceSpace& x, const FinSupportFunction& phi) {
  auto supp = phi.support();
  const int s = static_cast<int>(supp.size());
  std::map<unsigned, double> memo;
  std::function<double(unsigned)> rec = [&](unsigned mask) -> double {
    if (!mask) return 0.0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int i = __builtin_ctz(mask);
    double best = std::numeric_limits<double>::infinity();
    for (int j = i + 1; j < s; ++j) {
      if (!(mask & (1u << j))) continue;
      const int vi = phi.values[supp[i]], vj = phi.values[supp[j]];
      if ((vi + vj) % phi.modulus != 0) continue;
      best = std::min(best, x.d(supp[i], supp[j]).value() + rec(mask & ~(1u << i) & ~(1u << j)));
    }
    memo[mask] = best;
    return best;
  };
  return rec(s >= 32 ? 0u : (1u << s) - 1);
}

// Single-coordinate decrement probe for extremality, fixed step.
bool probe_extremal(const DistanceSpace& x, const AdmissibleFunction& f, double step = 1e-3) {
  for (int v = 0; v < x.size(); ++v) {
    if (!std::isfinite(f.values[v]) || f.values[v] < step) continue;
    AdmissibleFunction g = f;
    g.values[v] -= step;
    if (is_admissible(x, g, 0.0).admissible) return false;  // still room below
  }
  return true;
}

// ---------------------------------------------------------------------------
// metric_core

Failure check_validate_roundtrip(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  DistanceSpace again = DistanceSpace::validate(x.labels(), x.matrix());
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j)
      if (again.d(i, j) != x.d(i, j)) return "revalidation changed an entry";
  return std::nullopt;
}

Failure check_validate_detects_corruption(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, std::max(3, cfg.max_size), false);
  if (x.size() < 3) return std::nullopt;
  auto m = x.matrix();
  const int i = 0, j = 1, k = 2;
  ExtReal bump = m[i][j] + m[j][k] + ExtReal(1.0);
  m[i][k] = bump;
  m[k][i] = bump;
  auto bad = DistanceSpace::check(m);
  if (!bad || bad->code != "TriangleViolation")
    return "corrupted matrix not flagged as TriangleViolation";
  return std::nullopt;
}

Failure check_hausdorff_distance_axioms(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, std::min(cfg.max_size, 4), true);
  const int n = x.size();
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  for (const auto& a : subsets)
    for (const auto& b : subsets) {
      ExtReal ab = hausdorff(x, a, b);
      if (hausdorff(x, b, a) != ab) return "hausdorff asymmetric";
      if (a == b && ab != ExtReal(0.0)) return "hausdorff nonzero on equal sets";
      if (!a.empty() && !b.empty() && !ext_le(min_cross_distance(x, a, b), ab))
        return "min cross distance exceeds hausdorff";
    }
  for (const auto& a : subsets)
    for (const auto& b : subsets)
      for (const auto& c : subsets)
        if (!ext_le(hausdorff(x, a, c), hausdorff(x, a, b) + hausdorff(x, b, c)))
          return "hausdorff triangle inequality failed";
  return std::nullopt;
}

Failure check_lp_tuple_monotonicity(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  const int len = rng.range(0, 3);
  auto f = random_tuple(rng, x.size(), len);
  auto g = random_tuple(rng, x.size(), len);
  PNorm p = random_pnorm(rng), q = random_pnorm(rng);
  if (q.value() < p.value()) std::swap(p, q);
  ExtReal dp = lp_tuple_distance(x, f, g, p);
  ExtReal dq = lp_tuple_distance(x, f, g, q);
  if (!ext_le(dq, dp)) return "l^q exceeds l^p for p <= q";
  ExtReal bound = lp_comparison_factor(len, p, q) * (dq.finite() ? dq.value() : 0.0);
  if (dq.finite() && !ext_le(dp, bound)) return "l^p exceeds the comparison bound";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// tight_span

Failure check_projection_contract(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  AdmissibleFunction f = random_admissible(x, rng.next_u64());
  auto projected = project_extremal(x, f);
  if (projected.residual >= 1e-12) return "projection residual too large";
  AdmissibleFunction norm = normalize_component(x, f);
  for (int v = 0; v < x.size(); ++v)
    if (projected.function.values[v] > norm.values[v] + kTol)
      return "projection not below its input";
  if (!is_extremal(x, projected.function)) return "projection output not extremal";
  auto twice = project_extremal(x, projected.function);
  if (sup_distance(twice.function.values, projected.function.values) > ExtReal(kTol))
    return "projection not idempotent on extremal input";
  return std::nullopt;
}

Failure check_projection_nonexpanding(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, false);  // one component
  AdmissibleFunction f = random_admissible(x, rng.next_u64());
  AdmissibleFunction g = random_admissible(x, rng.next_u64());
  auto pf = project_extremal(x, f), pg = project_extremal(x, g);
  AdmissibleFunction nf = normalize_component(x, f), ng = normalize_component(x, g);
  if (sup_distance(pf.function.values, pg.function.values) >
      sup_distance(nf.values, ng.values) + ExtReal(kTol))
    return "projection expanded a pair";
  return std::nullopt;
}

Failure check_kuratowski_isometry(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j) {
      ExtReal sup = sup_distance(kuratowski(x, i).values, kuratowski(x, j).values);
      if (sup != x.d(i, j)) return "kuratowski embedding not isometric";
    }
  return std::nullopt;
}

Failure check_extremality_probe_agreement(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, std::min(4, cfg.max_size), true);
  AdmissibleFunction f = random_admissible(x, rng.next_u64());
  AdmissibleFunction r = project_extremal(x, f).function;
  if (!probe_extremal(x, r)) return "probe rejects a projected (extremal) function";
  AdmissibleFunction lifted = r;
  bool any_finite = false;
  for (double& v : lifted.values)
    if (std::isfinite(v)) {
      v += 0.1;
      any_finite = true;
    }
  if (any_finite) {
    if (is_extremal(x, lifted)) return "lifted function still reported extremal";
    if (probe_extremal(x, lifted)) return "probe misses the slack of a lifted function";
  }
  return std::nullopt;
}

Failure check_sample_embedding(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  DistanceSpace aug = sample_tight_span(x, 4, rng.next_u64());
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j)
      if (aug.d(i, j) != x.d(i, j)) return "augmented space does not extend x isometrically";
  for (int s = x.size(); s < aug.size(); ++s)
    for (int i = 0; i < x.size(); ++i)
      for (int j = 0; j < x.size(); ++j)
        if (!ext_le(aug.d(i, j), aug.d(i, s) + aug.d(s, j)))
          return "sampled point violates the triangle inequality";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// functor_engine

Failure check_functor_composition(Rng& rng, const SuiteConfig& cfg) {
  (void)cfg;
  for (const auto& f : standard_functors()) {
    const int n = std::max(1, f->degree());
    auto carrier = f->carrier();
    Element a = random_element(rng, carrier);
    auto h = random_tuple(rng, n, n);
    auto map = random_tuple(rng, 5, n);
    std::vector<int> composed(n);
    for (int i = 0; i < n; ++i) composed[i] = map[h[i]];
    if (f->transport(a, composed) != f->transport(f->transport(a, h), map))
      return "transport does not respect composition for " + f->name();
  }
  return std::nullopt;
}

Failure check_p_monotonicity(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  for (const auto& f : standard_functors()) {
    const std::size_t n = static_cast<std::size_t>(std::max(1, f->degree()));
    FunctorMetric m1(*f, x, PNorm::one());
    FunctorMetric m2(*f, x, PNorm::two());
    FunctorMetric mi(*f, x, PNorm::infinity());
    auto d1 = m1.distance_matrix(), d2 = m2.distance_matrix(), di = mi.distance_matrix();
    const int count = static_cast<int>(m1.elements().size());
    struct Pair { const std::vector<std::vector<ExtReal>>* lo; const std::vector<std::vector<ExtReal>>* hi; PNorm p; PNorm q; };
    const Pair pairs[] = {{&d1, &d2, PNorm::one(), PNorm::two()},
                          {&d2, &di, PNorm::two(), PNorm::infinity()},
                          {&d1, &di, PNorm::one(), PNorm::infinity()}};
    for (const auto& pr : pairs)
      for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
          ExtReal lo = (*pr.lo)[i][j], hi = (*pr.hi)[i][j];
          if (!ext_le(hi, lo)) return "d^q exceeds d^p for p <= q in " + f->name();
          if (hi.finite() &&
              !ext_le(lo, lp_comparison_factor(n, pr.p, pr.q) * hi.value()))
            return "comparison factor bound failed in " + f->name();
        }
  }
  return std::nullopt;
}

Failure check_finiteness_iff_quotient(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  PNorm p = random_pnorm(rng);
  auto q = quotient_map(x);
  for (const auto& f : standard_functors()) {
    FunctorMetric metric(*f, x, p);
    auto dm = metric.distance_matrix();
    const auto& els = metric.elements();
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t j = 0; j < els.size(); ++j) {
        bool same_image = f->transport(els[i], q) == f->transport(els[j], q);
        if (dm[i][j].finite() != same_image)
          return "finiteness does not match quotient images in " + f->name();
      }
  }
  return std::nullopt;
}

Failure check_upper_bounds(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  PNorm p = random_pnorm(rng);
  for (const auto& f : standard_functors()) {
    FunctorMetric metric(*f, x, p);
    auto dm = metric.distance_matrix();
    const auto& els = metric.elements();
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t j = 0; j < els.size(); ++j) {
        if (!dm[i][j].finite()) continue;
        auto sa = f->support(els[i]), sb = f->support(els[j]);
        std::vector<int> su = sa;
        su.insert(su.end(), sb.begin(), sb.end());
        std::sort(su.begin(), su.end());
        su.erase(std::unique(su.begin(), su.end()), su.end());
        double ra = set_stats(x, sa).real_diam.value();
        double rb = set_stats(x, sb).real_diam.value();
        double ru = set_stats(x, su).real_diam.value();
        double chain_bound = card_root(sa.size(), p) * ra +
                             min_cross_distance_lp(x, sa, sb, p).value() +
                             card_root(sb.size(), p) * rb;
        double union_bound = (card_root(sa.size(), p) + card_root(sb.size(), p)) * ru;
        if (!ext_le(dm[i][j], chain_bound)) return "three-leg upper bound failed in " + f->name();
        if (!ext_le(dm[i][j], union_bound)) return "union upper bound failed in " + f->name();
      }
  }
  return std::nullopt;
}

Failure check_lower_bound_separation(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  for (const auto& f : standard_functors()) {
    FunctorMetric metric(*f, x, PNorm::one());
    auto dm = metric.distance_matrix();
    const auto& els = metric.elements();
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t j = 0; j < els.size(); ++j) {
        if (i == j) continue;
        auto sa = f->support(els[i]), sb = f->support(els[j]);
        std::vector<int> su = sa;
        su.insert(su.end(), sb.begin(), sb.end());
        std::sort(su.begin(), su.end());
        su.erase(std::unique(su.begin(), su.end()), su.end());
        if (!ext_le(set_stats(x, su).sep, dm[i][j]))
          return "d^1 under the separation lower bound in " + f->name();
        if (su.size() <= 1 && dm[i][j].finite())
          return "small-support pair at finite distance in " + f->name();
      }
  }
  return std::nullopt;
}

Failure check_shukel_lower_bound(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  for (const auto& f : standard_functors()) {
    if (!f->preserves_supports()) continue;  // symdiff-pairs is the negative control
    FunctorMetric metric(*f, x, PNorm::infinity());
    auto dm = metric.distance_matrix();
    const auto& els = metric.elements();
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t j = 0; j < els.size(); ++j) {
        if (i == j) continue;
        auto sa = f->support(els[i]), sb = f->support(els[j]);
        std::vector<int> su = sa;
        su.insert(su.end(), sb.begin(), sb.end());
        std::sort(su.begin(), su.end());
        su.erase(std::unique(su.begin(), su.end()), su.end());
        ExtReal h = hausdorff(x, sa, sb);
        ExtReal sep = set_stats(x, su).sep;
        ExtReal bound = ext_max(h, sep.finite() ? ExtReal(sep.value() / 3.0) : sep);
        if (!ext_le(bound, dm[i][j]))
          return "support-preserving lower bound failed in " + f->name();
      }
  }
  return std::nullopt;
}

Failure check_lipschitz_functorial(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  DistanceSpace y = random_space(rng, cfg.max_size, true);
  auto map = random_tuple(rng, y.size(), x.size());
  PNorm p = random_pnorm(rng);
  for (const auto& f : standard_functors()) {
    auto [lip_f, lip_ff] = induced_map_lipschitz(*f, x, y, map, p);
    if (!ext_le(lip_ff, lip_f)) return "Lip(Ff) exceeds Lip(f) for " + f->name();
  }
  return std::nullopt;
}

Failure check_xi_point_isometry(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  PNorm p = random_pnorm(rng);
  std::vector<std::unique_ptr<Functor>> fs;
  fs.push_back(make_capped_hyperspace(2));
  fs.push_back(make_nonempty_pairs());
  for (const auto& f : fs) {
    FunctorMetric metric(*f, x, p);
    for (int i = 0; i < x.size(); ++i)
      for (int j = 0; j < x.size(); ++j) {
        ExtReal d = metric.distance(Element::set({i}), Element::set({j}));
        if (!ext_close(d, x.d(i, j)))
          return "singleton embedding not isometric for " + f->name();
      }
  }
  return std::nullopt;
}

// For the finite-power functor, the engine value is sandwiched between the
// sup-distance and the l^p distance of the tuples, with equality at p = inf.
Failure check_power_sandwich(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  auto p2 = make_power_functor(2);
  PNorm p = random_pnorm(rng);
  FunctorMetric metric(*p2, x, p);
  for (const auto& a : metric.elements())
    for (const auto& b : metric.elements()) {
      ExtReal d = metric.distance(a, b);
      ExtReal lo = lp_tuple_distance(x, a.idx, b.idx, PNorm::infinity());
      ExtReal hi = lp_tuple_distance(x, a.idx, b.idx, p);
      if (!ext_le(lo, d) || !ext_le(d, hi)) return "power sandwich violated";
      if (p.is_inf() && !(ext_le(d, lo) && ext_le(lo, d)))
        return "power functor at p = inf differs from the sup distance";
    }
  return std::nullopt;
}

Failure check_hyperspace_inclusion(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  PNorm p = random_pnorm(rng);
  auto h2 = make_capped_hyperspace(2);
  auto h3 = make_capped_hyperspace(3);
  FunctorMetric m2(*h2, x, p), m3(*h3, x, p);
  for (const auto& a : m2.elements())
    for (const auto& b : m2.elements())
      if (!ext_le(m3.distance(a, b), m2.distance(a, b)))
        return "inclusion H_2 -> H_3 expanded a distance";
  return std::nullopt;
}

Failure check_oracle_agreement(Rng& rng, const SuiteConfig& cfg) {
  (void)cfg;
  DistanceSpace x = random_space(rng, 3, true);
  PNorm p = random_pnorm(rng);
  for (const auto& f : standard_functors()) {
    FunctorMetric metric(*f, x, p);
    const auto& els = metric.elements();
    const int max_len = static_cast<int>(els.size()) - 1;
    for (const auto& a : els)
      for (const auto& b : els) {
        ExtReal fast = metric.distance(a, b);
        ExtReal slow = chain_oracle(*f, x, p, a, b, max_len);
        if (fast.finite() != slow.finite()) return "oracle finiteness mismatch in " + f->name();
        if (fast.finite() && std::fabs(fast.value() - slow.value()) > 1e-12)
          return "oracle disagrees with the engine in " + f->name() + ": " + fmt(fast) +
                 " vs " + fmt(slow);
      }
  }
  return std::nullopt;
}

Failure check_relabel_invariance(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  PNorm p = random_pnorm(rng);
  std::vector<int> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = x.size() - 1; i > 0; --i) std::swap(perm[i], perm[rng.range(0, i)]);
  std::vector<ExtReal> flat;
  flat.reserve(static_cast<std::size_t>(x.size()) * x.size());
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j) flat.push_back(x.d(perm[i], perm[j]));
  DistanceSpace y = DistanceSpace::from_trusted(x.labels(), std::move(flat));
  for (const auto& f : standard_functors()) {
    FunctorMetric mx(*f, x, p), my(*f, y, p);
    for (const auto& a : my.elements())
      for (const auto& b : my.elements()) {
        ExtReal dy = my.distance(a, b);
        ExtReal dx = mx.distance(f->transport(a, perm), f->transport(b, perm));
        if (!ext_close(dy, dx)) return "relabeling changed a distance in " + f->name();
      }
  }
  return std::nullopt;
}

Failure check_chain_certificates(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  PNorm p = random_pnorm(rng);
  for (const auto& f : standard_functors()) {
    FunctorMetric metric(*f, x, p);
    const auto& els = metric.elements();
    Element a = random_element(rng, els), b = random_element(rng, els);
    auto result = metric.distance_with_chain(a, b);
    if (!result.distance.finite()) {
      if (result.chain) return "infinite distance carries a chain in " + f->name();
      continue;
    }
    if (!result.chain) return "finite distance missing its chain in " + f->name();
    if (!chain_is_valid(*f, x, p, a, b, *result.chain, result.distance))
      return "chain certificate invalid in " + f->name();
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// hyperspace

Failure check_hausdorff_le_d1(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, std::min(cfg.max_size, 5), true);
  auto a = random_subset(rng, x.size(), x.size(), true);
  auto b = random_subset(rng, x.size(), x.size(), true);
  auto result = d1_hyperspace(x, a, b);
  if (!ext_le(hausdorff(x, a, b), result.value)) return "hausdorff exceeds d1";
  if (result.value.finite()) {
    if (!result.witness) return "finite d1 missing its witness";
    if (!result.witness->valid_for(x, a, b)) return "d1 witness graph invalid";
    if (!ext_close(result.witness->length(x), result.value))
      return "witness length differs from the reported d1";
  }
  if (!ext_le(result.value, d1_upper_mst(x, a, b))) return "d1 exceeds its MST upper bound";
  return std::nullopt;
}

Failure check_hn_sandwich(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  auto h2 = make_capped_hyperspace(2);
  FunctorMetric metric(*h2, x, PNorm::infinity());
  auto a = random_subset(rng, x.size(), 2, true);
  auto b = random_subset(rng, x.size(), 2, true);
  ExtReal h = hausdorff(x, a, b);
  ExtReal d = metric.distance(Element::set(a), Element::set(b));
  if (!ext_le(h, d)) return "hausdorff exceeds d^inf on H_2";
  if (h.finite() && !ext_le(d, 3.0 * h.value())) return "d^inf on H_2 exceeds 3x hausdorff";
  if (!h.finite() && d.finite()) return "d^inf finite across an infinite hausdorff gap";
  return std::nullopt;
}

Failure check_graph_roundtrip(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, std::min(4, cfg.max_size), true);
  auto a = random_subset(rng, x.size(), x.size(), true);
  auto b = random_subset(rng, x.size(), x.size(), true);
  auto result = d1_hyperspace(x, a, b);
  if (!result.value.finite()) return std::nullopt;
  // Validate the chain by hand against the hyperspace action and compare costs.
  auto image = [](const ChainStep& s, bool to) {
    std::vector<int> out;
    for (std::size_t i = 0; i < s.carrier.idx.size(); ++i)
      out.push_back((to ? s.to : s.from)[s.carrier.idx[i]]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  std::vector<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  auto roundtrip = [&](const SpanningGraph& graph) -> Failure {
    auto chain = chain_from_graph(x, a, b, graph);
    if (image(chain.front(), false) != sa) return "graph chain does not start at a";
    if (image(chain.back(), true) != sb) return "graph chain does not end at b";
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (image(chain[i], true) != image(chain[i + 1], false))
        return "graph chain does not glue";
    ExtReal cost = 0.0;
    for (const auto& s : chain) cost = cost + lp_tuple_distance(x, s.from, s.to, PNorm::one());
    if (!ext_le(cost, graph.length(x))) return "graph chain costs more than the graph";
    return std::nullopt;
  };
  if (auto failure = roundtrip(*result.witness)) return failure;
  // The conversion must also survive non-minimal witnesses: pad the graph
  // with redundant finite edges over a u b before peeling.
  SpanningGraph noisy = *result.witness;
  std::vector<int> pool = sa;
  pool.insert(pool.end(), sb.begin(), sb.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (x.d(pool[i], pool[j]).finite() && rng.chance(0.5))
        noisy.edges.emplace_back(pool[i], pool[j]);
  return roundtrip(noisy);
}

double mst_length(const DistanceSpace& x, const std::vector<int>& vs) {
  if (vs.size() <= 1) return 0.0;
  std::vector<double> key(vs.size(), std::numeric_limits<double>::infinity());
  std::vector<bool> used(vs.size(), false);
  key[0] = 0.0;
  double total = 0.0;
  for (std::size_t step = 0; step < vs.size(); ++step) {
    int pick = -1;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (!used[i] && (pick < 0 || key[i] < key[pick])) pick = static_cast<int>(i);
    if (std::isinf(key[pick])) return std::numeric_limits<double>::infinity();
    used[pick] = true;
    total += key[pick];
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (!used[i]) key[i] = std::min(key[i], x.d(vs[pick], vs[i]).value());
  }
  return total;
}

// Independent oracle: the Steiner length in a metric closure is the minimum
// MST over the terminals joined with any subset of extra vertices.
Failure check_steiner_oracle(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, std::min(cfg.max_size + 2, 6), true);
  auto terminals = random_subset(rng, x.size(), x.size(), false);
  auto result = steiner_tree(x, terminals);
  std::vector<int> extras;
  for (int v = 0; v < x.size(); ++v)
    if (!std::binary_search(terminals.begin(), terminals.end(), v)) extras.push_back(v);
  double brute = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << extras.size()); ++mask) {
    std::vector<int> vs = terminals;
    for (std::size_t i = 0; i < extras.size(); ++i)
      if (mask & (1u << i)) vs.push_back(extras[i]);
    brute = std::min(brute, mst_length(x, vs));
  }
  ExtReal oracle = std::isinf(brute) ? ExtReal::infinity() : ExtReal(brute);
  if (!(ext_le(result.length, oracle) && ext_le(oracle, result.length)))
    return "steiner DP " + fmt(result.length) + " differs from exhaustive MST " + fmt(oracle);
  ExtReal from_edges = 0.0;
  for (auto [u, v] : result.edges) from_edges = from_edges + x.d(u, v);
  if (result.length.finite() && !ext_close(from_edges, result.length))
    return "steiner edge list does not sum to the reported length";
  return std::nullopt;
}

Failure check_subfunctor_monotonicity(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  const int k = std::min(3, x.size());
  auto hk = make_capped_hyperspace(k);
  FunctorMetric metric(*hk, x, PNorm::one());
  auto a = random_subset(rng, x.size(), k, true);
  auto b = random_subset(rng, x.size(), k, true);
  ExtReal full = d1_hyperspace(x, a, b).value;
  ExtReal capped = metric.distance(Element::set(a), Element::set(b));
  if (!ext_le(full, capped)) return "full-hyperspace d1 exceeds the capped engine value";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// group_norms

Failure check_group_invariance(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  const int m = rng.range(2, 4);
  auto a = random_group_function(rng, x, m);
  auto b = random_group_function(rng, x, m);
  auto c = random_zero_sum_function(rng, x, m);
  auto any = random_group_function(rng, x, m);
  ExtReal base = d1_group(x, a, b).value;
  ExtReal shifted = d1_group(x, a + c, b + c).value;
  if (!(ext_le(base, shifted) && ext_le(shifted, base)))
    return "d1 not invariant under an F0 shift";
  if (!ext_le(d1_group(x, a + any, b + any).value, base)) return "d1 not subinvariant";
  return std::nullopt;
}

Failure check_boolean_agreement(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, std::min(cfg.max_size, 6), true);
  auto supp = random_subset(rng, x.size(), 6, true);
  if (supp.size() % 2 == 1) supp.pop_back();
  FinSupportFunction phi = FinSupportFunction::zero(2, x.size());
  for (int i : supp) phi.values[i] = 1;
  FinSupportFunction zero = FinSupportFunction::zero(2, x.size());
  ExtReal d = d1_group(x, phi, zero).value;
  ExtReal r = norm_restricted(x, phi);
  ExtReal matching = boolean_matching_norm(x, phi).value;
  if (!(ext_close(d, matching) && ext_close(d, r)))
    return "boolean norms disagree: d1=" + fmt(d) + " matching=" + fmt(matching) +
           " restricted=" + fmt(r);
  return std::nullopt;
}

Failure check_norm_chain(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, std::min(cfg.max_size, 5), true);
  const int m = rng.range(2, 4);
  auto phi = random_zero_sum_function(rng, x, m);
  FinSupportFunction zero = FinSupportFunction::zero(m, x.size());
  ExtReal d = d1_group(x, phi, zero).value;
  ExtReal r = norm_restricted(x, phi);
  double cap = cap_norm(x, phi);
  if (!ext_le(d, r)) return "d1 exceeds the restricted norm";
  if (!ext_le(r, std::isinf(cap) ? ExtReal::infinity() : ExtReal(cap)))
    return "restricted norm exceeds the disjoint-pair norm";
  auto result = d1_group(x, phi, zero);
  if (result.moves) {
    FinSupportFunction sum = zero;
    ExtReal cost = 0.0;
    for (const auto& mv : *result.moves) {
      sum.values[mv.plus] = (sum.values[mv.plus] + mv.g) % m;
      sum.values[mv.minus] = ((sum.values[mv.minus] - mv.g) % m + m) % m;
      cost = cost + x.d(mv.plus, mv.minus);
    }
    if (sum.normalized() != phi.normalized()) return "dipole witness does not represent phi";
    if (!ext_close(cost, d)) return "dipole witness cost differs from d1";
  }
  return std::nullopt;
}

Failure check_group_lower_bound(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  const int m = rng.range(2, 4);
  auto a = random_group_function(rng, x, m);
  auto b = random_group_function(rng, x, m);
  if (a.normalized() == b.normalized()) return std::nullopt;
  auto sa = a.support(), sb = b.support();
  std::vector<int> su = sa;
  su.insert(su.end(), sb.begin(), sb.end());
  std::sort(su.begin(), su.end());
  su.erase(std::unique(su.begin(), su.end()), su.end());
  if (!ext_le(set_stats(x, su).sep, d1_group(x, a, b).value))
    return "d1 under the separation lower bound";
  return std::nullopt;
}

Failure check_graev_dominates(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  const int m = rng.range(2, 4);
  auto a = random_group_function(rng, x, m);
  auto b = random_group_function(rng, x, m);
  ExtReal d = d1_group(x, a, b).value;
  ExtReal g = graev_distance(x, a, b, 1);
  if (!ext_le(d, g)) return "graev distance below d1";
  if (m <= 3 && !(ext_le(g, d) && ext_le(d, g))) return "graev differs from d1 for m <= 3";
  return std::nullopt;
}

Failure check_pcheck_classification(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  const int m = rng.range(2, 4);
  auto a = random_zero_sum_function(rng, x, m);
  auto b = random_zero_sum_function(rng, x, m);
  ExtReal v = pcheck_distance(x, a, b);
  bool in_f00 = classify(x, a - b).in_f00;
  if (in_f00 != (v == ExtReal(0.0))) return "pcheck disagrees with F00 membership";
  if (!in_f00 && v.finite()) return "pcheck finite outside F00";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// entropy

Failure check_cover_properties(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, cfg.max_size, true);
  auto dists = finite_distances(x);
  if (dists.empty()) return std::nullopt;
  double eps1 = dists[dists.size() / 3].value();
  double eps2 = dists[2 * dists.size() / 3].value() + kTol;
  if (eps2 < eps1) std::swap(eps1, eps2);
  auto [c1, cert1] = min_cover(x, eps1);
  auto [c2, cert2] = min_cover(x, eps2);
  if (c2 > c1) return "min_cover not antitone in epsilon";
  if (!cert1.valid_for(x) || !cert2.valid_for(x)) return "cover certificate invalid";
  std::vector<int> all(x.size());
  std::iota(all.begin(), all.end(), 0);
  ExtReal diam = set_stats(x, all).diam;
  if (diam.finite() && local_entropy(x, eps1, diam.value() + 1.0) != c1)
    return "local entropy with delta > diam differs from the global cover";
  int per_component = 0;
  for (const auto& block : x.components())
    per_component += min_cover(subspace(x, block), eps1).first;
  if (per_component != c1) return "cover count does not split over components";
  return std::nullopt;
}

// Independent oracle: minimum clique cover by subset DP over the threshold
// graph (always pairing the lowest uncovered point into its block).
Failure check_cover_oracle(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, std::min(cfg.max_size + 3, 8), true);
  auto dists = finite_distances(x);
  if (dists.empty()) return std::nullopt;
  double eps = dists[rng.below(static_cast<int>(dists.size()))].value();
  const int n = x.size();
  std::vector<unsigned> adj(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && x.d(i, j).value() <= eps) adj[i] |= 1u << j;
  const unsigned full = (1u << n) - 1;
  std::vector<unsigned> is_clique(full + 1, 0);
  for (unsigned mask = 1; mask <= full; ++mask) {
    const int i = __builtin_ctz(mask);
    const unsigned rest = mask & (mask - 1);
    is_clique[mask] = rest == 0 || (is_clique[rest] && (adj[i] & rest) == rest);
  }
  std::vector<int> dp(full + 1, n + 1);
  dp[0] = 0;
  for (unsigned mask = 1; mask <= full; ++mask) {
    const unsigned low = mask & ~(mask - 1);
    for (unsigned sub = mask; sub > 0; sub = (sub - 1) & mask) {
      if (!(sub & low) || !is_clique[sub]) continue;
      dp[mask] = std::min(dp[mask], 1 + dp[mask ^ sub]);
    }
  }
  auto [count, cert] = min_cover(x, eps);
  if (count != dp[full])
    return "min_cover " + std::to_string(count) + " differs from DP oracle " +
           std::to_string(dp[full]);
  if (!cert.valid_for(x)) return "cover certificate invalid";
  return std::nullopt;
}

// Independent oracle for the local entropy: enumerate every subset of
// diameter < delta directly.
Failure check_local_entropy_oracle(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, std::min(cfg.max_size + 2, 7), true);
  auto dists = finite_distances(x);
  if (dists.empty()) return std::nullopt;
  double eps = dists[rng.below(static_cast<int>(dists.size()))].value();
  double delta = dists[rng.below(static_cast<int>(dists.size()))].value() * 1.01;
  const int n = x.size();
  int brute = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    bool small = true;
    for (std::size_t i = 0; i < subset.size() && small; ++i)
      for (std::size_t j = i + 1; j < subset.size() && small; ++j)
        if (!(x.d(subset[i], subset[j]).value() < delta)) small = false;
    if (!small) continue;
    brute = std::max(brute, min_cover(subspace(x, subset), eps).first);
  }
  int fast = local_entropy(x, eps, delta);
  if (fast != brute)
    return "local_entropy " + std::to_string(fast) + " differs from subset oracle " +
           std::to_string(brute);
  return std::nullopt;
}

Failure check_entropy_inequalities(Rng& rng, const SuiteConfig& cfg) {
  DistanceSpace x = random_space(rng, std::min(cfg.max_size, 4), true);
  auto dists = finite_distances(x);
  if (dists.empty()) return std::nullopt;
  double eps = dists[rng.below(static_cast<int>(dists.size()))].value();
  double delta = dists[rng.below(static_cast<int>(dists.size()))].value();
  PNorm p = random_pnorm(rng);
  for (const auto& f : standard_functors()) {
    auto report = functor_entropy_check(*f, x, p, eps, delta);
    if (!report.all_ok()) return "entropy inequality violated for " + f->name();
  }
  return std::nullopt;
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> props = {
      {"metric/validate-roundtrip", check_validate_roundtrip},
      {"metric/validate-detects-corruption", check_validate_detects_corruption},
      {"metric/hausdorff-axioms", check_hausdorff_distance_axioms},
      {"metric/lp-monotonicity", check_lp_tuple_monotonicity},
      {"tightspan/projection-contract", check_projection_contract},
      {"tightspan/projection-nonexpanding", check_projection_nonexpanding},
      {"tightspan/kuratowski-isometry", check_kuratowski_isometry},
      {"tightspan/extremality-probe", check_extremality_probe_agreement},
      {"tightspan/sample-embedding", check_sample_embedding},
      {"engine/composition-law", check_functor_composition},
      {"engine/p-monotonicity", check_p_monotonicity},
      {"engine/finiteness-iff-quotient", check_finiteness_iff_quotient},
      {"engine/upper-bounds", check_upper_bounds},
      {"engine/lower-bound-separation", check_lower_bound_separation},
      {"engine/lower-bound-support-preserving", check_shukel_lower_bound},
      {"engine/lipschitz-functorial", check_lipschitz_functorial},
      {"engine/xi-point-isometry", check_xi_point_isometry},
      {"engine/power-sandwich", check_power_sandwich},
      {"engine/hyperspace-inclusion", check_hyperspace_inclusion},
      {"engine/oracle-agreement", check_oracle_agreement},
      {"engine/relabel-invariance", check_relabel_invariance},
      {"engine/chain-certificates", check_chain_certificates},
      {"hyperspace/hausdorff-le-d1", check_hausdorff_le_d1},
      {"hyperspace/hn-sandwich", check_hn_sandwich},
      {"hyperspace/graph-roundtrip", check_graph_roundtrip},
      {"hyperspace/steiner-oracle", check_steiner_oracle},
      {"hyperspace/subfunctor-monotonicity", check_subfunctor_monotonicity},
      {"group/invariance", check_group_invariance},
      {"group/boolean-agreement", check_boolean_agreement},
      {"group/norm-chain", check_norm_chain},
      {"group/lower-bound-separation", check_group_lower_bound},
      {"group/graev-dominates", check_graev_dominates},
      {"group/pcheck-classification", check_pcheck_classification},
      {"entropy/cover-properties", check_cover_properties},
      {"entropy/cover-oracle", check_cover_oracle},
      {"entropy/local-entropy-oracle", check_local_entropy_oracle},
      {"entropy/functor-inequalities", check_entropy_inequalities},
  };
  return props;
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const SuiteConfig& config) {
  std::vector<PropertyResult> results;
  const auto& props = all_properties();
  for (std::size_t pi = 0; pi < props.size(); ++pi) {
    PropertyResult result;
    result.name = props[pi].name;
    result.trials = config.trials;
    for (int trial = 0; trial < config.trials; ++trial) {
      const std::uint64_t seed = Rng::derive(config.seed, pi, trial);
      Rng rng(seed);
      Failure failure;
      try {
        failure = props[pi].check(rng, config);
      } catch (const std::exception& ex) {
        failure = std::string("exception: ") + ex.what();
      }
      if (failure) {
        if (result.failures == 0) {
          result.first_failure = *failure;
          result.replay_seed = seed;
        }
        ++result.failures;
      }
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace metrize
