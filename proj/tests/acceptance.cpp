// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "metrize/entropy.hpp"
#include "metrize/examples.hpp"
#include "metrize/functor_metric.hpp"
#include "metrize/generators.hpp"
#include "metrize/group_norms.hpp"
#include "metrize/hyperspace.hpp"
#include "metrize/property_suite.hpp"
#include "metrize/tight_span.hpp"

using namespace metrize;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string report;  // deterministic transcript for the repeatability check
  double seconds = 0.0;
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string num(ExtReal v) { return v.finite() ? num(v.value()) : "inf"; }

bool close(ExtReal actual, double expected, double tol) {
  return actual.finite() && std::fabs(actual.value() - expected) <= tol;
}

bool ext_le(ExtReal a, ExtReal b, double tol = 1e-9) {
  if (!b.finite()) return true;
  if (!a.finite()) return false;
  return a.value() <= b.value() + tol;
}

void note_failure(Outcome& out, const std::string& message) {
  out.pass = false;
  if (!out.detail.empty()) out.detail += "; ";
  out.detail += message;
}

const double kSqrt3 = std::sqrt(3.0);

// Criterion 1: the rectangle pair distances at p = 1, 2, inf in the plain
// and the extended space.
Outcome criterion_rectangle() {
  Outcome out;
  auto functor = make_nonempty_pairs();
  const Element a = Element::set({0, 1}), b = Element::set({2, 3});
  DistanceSpace x = rectangle_space();
  DistanceSpace y = rectangle_extended_space();
  struct Case {
    const char* name;
    const DistanceSpace* space;
    PNorm p;
    double expected;
  };
  const Case cases[] = {
      {"X/p=1", &x, PNorm::one(), 10.0 + 4.0 * kSqrt3},
      {"X/p=2", &x, PNorm::two(), 10.0 + 4.0 * kSqrt3},
      {"X/p=inf", &x, PNorm::infinity(), 10.0 + 4.0 * kSqrt3},
      {"Y/p=1", &y, PNorm::one(), 16.0},
      {"Y/p=2", &y, PNorm::two(), 8.0 + 4.0 * std::sqrt(2.0)},
      {"Y/p=inf", &y, PNorm::infinity(), 12.0},
  };
  for (const auto& c : cases) {
    ExtReal actual = FunctorMetric(*functor, *c.space, c.p).distance(a, b);
    out.report += std::string(c.name) + "=" + num(actual) + "\n";
    if (!close(actual, c.expected, 1e-9))
      note_failure(out, std::string(c.name) + " expected " + num(c.expected) + " got " +
                            num(actual));
  }
  return out;
}

// Criterion 2: the triangle-with-center example over Z_3.
Outcome criterion_triangle() {
  Outcome out;
  DistanceSpace t = triangle_centroid_space();
  FinSupportFunction phi{3, {0, 1, 1, 1}};
  FinSupportFunction zero = FinSupportFunction::zero(3, 4);
  ExtReal d = d1_group(t, phi, zero).value;
  ExtReal r = norm_restricted(t, phi);
  out.report = "d1=" + num(d) + " restricted=" + num(r) + "\n";
  if (!close(d, kSqrt3, 1e-9)) note_failure(out, "d1 expected sqrt(3), got " + num(d));
  if (!close(r, 2.0, 1e-9)) note_failure(out, "restricted norm expected 2, got " + num(r));
  return out;
}

// Criterion 3: the modulus-4 generator gap on two points at distance 1.
Outcome criterion_graev() {
  Outcome out;
  DistanceSpace two = two_point_space(1.0);
  FinSupportFunction a{4, {2, 0}}, b{4, {0, 2}};
  ExtReal g = graev_distance(two, a, b, 1);
  ExtReal d = d1_group(two, a, b).value;
  out.report = "graev=" + num(g) + " d1=" + num(d) + "\n";
  if (!(g == ExtReal(2.0))) note_failure(out, "graev expected exactly 2, got " + num(g));
  if (!(d == ExtReal(1.0))) note_failure(out, "d1 expected exactly 1, got " + num(d));
  return out;
}

// Criterion 4: boolean norm agreement on 200 seeded instances.
Outcome criterion_boolean_agreement() {
  Outcome out;
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng(Rng::derive(2024, 4, trial));
    DistanceSpace x = random_space(rng, 6, true);
    auto supp = random_subset(rng, x.size(), 6, true);
    if (supp.size() % 2 == 1) supp.pop_back();
    FinSupportFunction phi = FinSupportFunction::zero(2, x.size());
    for (int i : supp) phi.values[i] = 1;
    FinSupportFunction zero = FinSupportFunction::zero(2, x.size());
    ExtReal d = d1_group(x, phi, zero).value;
    ExtReal r = norm_restricted(x, phi);
    ExtReal m = boolean_matching_norm(x, phi).value;
    out.report += num(d) + "," + num(r) + "," + num(m) + "\n";
    if (!(ext_close(d, m) && ext_close(d, r))) {
      note_failure(out, "trial " + std::to_string(trial) + ": d1=" + num(d) +
                            " matching=" + num(m) + " restricted=" + num(r));
      break;
    }
  }
  return out;
}

// Criterion 5: the full property suite, seed 0, 200 trials, |X| <= 4.
Outcome criterion_property_suite() {
  Outcome out;
  SuiteConfig config;
  config.seed = 0;
  config.trials = 200;
  config.max_size = 4;
  auto results = run_property_suite(config);
  for (const auto& r : results) {
    out.report += r.name + ":" + std::to_string(r.failures) + "\n";
    if (r.failures > 0)
      note_failure(out, r.name + " failed " + std::to_string(r.failures) + "x (replay " +
                            std::to_string(r.replay_seed) + "): " + r.first_failure);
  }
  return out;
}

// Criterion 6: engine vs chain oracle on 50 small instances.
Outcome criterion_oracle() {
  Outcome out;
  std::vector<std::unique_ptr<Functor>> functors;
  functors.push_back(make_power_functor(2));
  functors.push_back(make_capped_hyperspace(2));
  functors.push_back(make_nonempty_pairs());
  functors.push_back(make_symdiff_pairs());
  for (int trial = 0; trial < 50 && out.pass; ++trial) {
    Rng rng(Rng::derive(2024, 6, trial));
    DistanceSpace x = random_space(rng, 3, true);
    for (const auto& f : functors) {
      for (PNorm p : {PNorm::one(), PNorm::two(), PNorm::infinity()}) {
        FunctorMetric metric(*f, x, p);
        const int max_len = static_cast<int>(metric.elements().size()) - 1;
        for (const auto& a : metric.elements())
          for (const auto& b : metric.elements()) {
            ExtReal fast = metric.distance(a, b);
            ExtReal slow = chain_oracle(*f, x, p, a, b, max_len);
            out.report += num(fast) + "|";
            bool same = fast.finite() == slow.finite() &&
                        (!fast.finite() ||
                         std::fabs(fast.value() - slow.value()) <= 1e-12);
            if (!same) {
              note_failure(out, "trial " + std::to_string(trial) + " " + f->name() +
                                    ": engine " + num(fast) + " oracle " + num(slow));
              break;
            }
          }
      }
    }
  }
  return out;
}

// Criterion 7: envelope machinery guarantees.
Outcome criterion_tight_span() {
  Outcome out;
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(Rng::derive(2024, 71, trial));
    DistanceSpace x = random_space(rng, 6, true);
    for (int i = 0; i < x.size() && out.pass; ++i)
      for (int j = 0; j < x.size(); ++j) {
        ExtReal sup = sup_distance(kuratowski(x, i).values, kuratowski(x, j).values);
        if (sup != x.d(i, j)) {
          note_failure(out, "embedding not exactly isometric at trial " + std::to_string(trial));
          break;
        }
      }
    if (!out.pass) break;
  }
  for (int trial = 0; trial < 100 && out.pass; ++trial) {
    Rng rng(Rng::derive(2024, 72, trial));
    DistanceSpace x = random_space(rng, 5, true);
    AdmissibleFunction f = random_admissible(x, rng.next_u64());
    auto projected = project_extremal(x, f, 1e-12, 200);
    out.report += num(projected.residual) + "|";
    if (projected.residual >= 1e-12)
      note_failure(out, "projection residual " + num(projected.residual));
    AdmissibleFunction norm = normalize_component(x, f);
    for (int v = 0; v < x.size(); ++v)
      if (projected.function.values[v] > norm.values[v] + 1e-9) {
        note_failure(out, "projection above its input at trial " + std::to_string(trial));
        break;
      }
  }
  for (int trial = 0; trial < 100 && out.pass; ++trial) {
    Rng rng(Rng::derive(2024, 73, trial));
    DistanceSpace x = random_space(rng, 4, true);
    AdmissibleFunction r = project_extremal(x, random_admissible(x, rng.next_u64())).function;
    bool probe_says_extremal = true;
    for (int v = 0; v < x.size(); ++v) {
      if (!std::isfinite(r.values[v]) || r.values[v] < 1e-3) continue;
      AdmissibleFunction g = r;
      g.values[v] -= 1e-3;
      if (is_admissible(x, g, 0.0).admissible) {
        probe_says_extremal = false;
        break;
      }
    }
    if (!probe_says_extremal || !is_extremal(x, r))
      note_failure(out, "extremality probe disagrees at trial " + std::to_string(trial));
  }
  return out;
}

// Criterion 8: hyperspace distance dominations and the Steiner example.
Outcome criterion_hyperspace() {
  Outcome out;
  auto h2 = make_capped_hyperspace(2);
  for (int trial = 0; trial < 200 && out.pass; ++trial) {
    Rng rng(Rng::derive(2024, 8, trial));
    DistanceSpace x = random_space(rng, 5, true);
    auto a = random_subset(rng, x.size(), x.size(), true);
    auto b = random_subset(rng, x.size(), x.size(), true);
    ExtReal h = hausdorff(x, a, b);
    ExtReal d1 = d1_hyperspace(x, a, b).value;
    out.report += num(h) + "<" + num(d1) + "|";
    if (!ext_le(h, d1)) note_failure(out, "hausdorff exceeds d1 at trial " + std::to_string(trial));

    auto sa = random_subset(rng, x.size(), 2, true);
    auto sb = random_subset(rng, x.size(), 2, true);
    ExtReal hs = hausdorff(x, sa, sb);
    ExtReal ds = FunctorMetric(*h2, x, PNorm::infinity())
                     .distance(Element::set(sa), Element::set(sb));
    if (!ext_le(hs, ds) || (hs.finite() && !ext_le(ds, 3.0 * hs.value())) ||
        (!hs.finite() && ds.finite()))
      note_failure(out, "H_2 sandwich failed at trial " + std::to_string(trial));
  }
  DistanceSpace t = triangle_centroid_space();
  ExtReal star = d1_hyperspace(t, std::vector<int>{1, 2, 3}, std::vector<int>{0}).value;
  out.report += "\nstar=" + num(star) + "\n";
  if (!close(star, kSqrt3, 1e-9))
    note_failure(out, "three-spoke example expected sqrt(3), got " + num(star));
  return out;
}

// Criterion 9: Cantor slope and the entropy inequalities.
Outcome criterion_entropy() {
  Outcome out;
  DistanceSpace c8 = cantor_space(8);
  std::vector<double> scales;
  for (int j = 1; j <= 8; ++j) scales.push_back(std::pow(3.0, -j));
  auto cantor = box_dim_estimate(c8, scales);
  out.report += "slope=" + num(cantor.ls_slope) + "\n";
  if (std::fabs(cantor.ls_slope - std::log(2.0) / std::log(3.0)) > 0.05)
    note_failure(out, "box slope " + num(cantor.ls_slope) + " outside ln2/ln3 +- 0.05");

  std::vector<std::unique_ptr<Functor>> functors;
  functors.push_back(make_power_functor(2));
  functors.push_back(make_capped_hyperspace(2));
  functors.push_back(make_nonempty_pairs());
  functors.push_back(make_symdiff_pairs());
  for (int trial = 0; trial < 20 && out.pass; ++trial) {
    Rng rng(Rng::derive(2024, 9, trial));
    DistanceSpace x = random_space(rng, 4, true);
    std::vector<double> finite;
    for (int i = 0; i < x.size(); ++i)
      for (int j = i + 1; j < x.size(); ++j)
        if (x.d(i, j).finite() && x.d(i, j) > ExtReal(0.0)) finite.push_back(x.d(i, j).value());
    if (finite.empty()) continue;
    std::sort(finite.begin(), finite.end());
    const double quantiles[] = {finite[finite.size() / 4], finite[finite.size() / 2],
                                finite[(3 * finite.size()) / 4]};
    for (double eps : quantiles)
      for (const auto& f : functors) {
        auto report = functor_entropy_check(*f, x, PNorm::two(), eps, eps);
        out.report += (report.all_ok() ? "+" : "-");
        if (!report.all_ok())
          note_failure(out, "entropy bound failed for " + f->name() + " at trial " +
                                std::to_string(trial));
      }
  }
  return out;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "rectangle pair distances (p = 1, 2, inf)", criterion_rectangle},
      {2, "triangle-with-center group norms", criterion_triangle},
      {3, "generator-gap example (m = 4)", criterion_graev},
      {4, "boolean norm agreement (200 instances)", criterion_boolean_agreement},
      {5, "invariant property suite (seed 0, 200 trials)", criterion_property_suite},
      {6, "engine/oracle equivalence (50 instances)", criterion_oracle},
      {7, "envelope projection guarantees", criterion_tight_span},
      {8, "hyperspace dominations and Steiner example", criterion_hyperspace},
      {9, "entropy slope and functor bounds", criterion_entropy},
  };

  const double limits[] = {0, 5.0, 5.0, 5.0, 0, 120.0, 0, 0, 0, 120.0};

  int failures = 0;
  std::vector<std::string> transcripts;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out = c.run();
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    transcripts.push_back(out.report);
    if (limits[c.id] > 0 && out.seconds > limits[c.id])
      note_failure(out, "runtime " + num(out.seconds) + "s exceeds " + num(limits[c.id]) + "s");
    std::printf("criterion %2d: %s  %s (%.2fs)%s%s\n", c.id, out.pass ? "PASS" : "FAIL",
                c.name.c_str(), out.seconds, out.detail.empty() ? "" : " -- ",
                out.detail.c_str());
    if (!out.pass) ++failures;
  }

  // Criterion 10: repeat every computation and demand identical transcripts.
  {
    auto start = std::chrono::steady_clock::now();
    bool identical = true;
    std::string detail;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
      Outcome again = criteria[i].run();
      if (again.report != transcripts[i]) {
        identical = false;
        detail = "criterion " + std::to_string(criteria[i].id) + " transcript changed";
        break;
      }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion 10: %s  repeated runs are byte-identical (%.2fs)%s%s\n",
                identical ? "PASS" : "FAIL", secs, detail.empty() ? "" : " -- ", detail.c_str());
    if (!identical) ++failures;
  }

  return failures;
}
