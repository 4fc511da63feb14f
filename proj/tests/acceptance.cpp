// Acceptance gate: one line per criterion, [PASS] or [FAIL], exit 0 iff all
// pass.  Every expected value is recomputed here from closed forms or direct
// enumeration, independent of the library's own bookkeeping.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fixlab/conditions.hpp"
#include "fixlab/errors.hpp"
#include "fixlab/metric_space.hpp"
#include "fixlab/picard.hpp"
#include "fixlab/report.hpp"
#include "fixlab/rng.hpp"
#include "fixlab/scenarios.hpp"
#include "fixlab/self_map.hpp"
#include "fixlab/tolerance.hpp"
#include "fixlab/witness.hpp"

using namespace fixlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("[%s] %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : ": ", detail.c_str());
  if (!pass) ++failures;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// ---- criterion 1: exact tables of the discrete example ----
void criterion_1() {
  auto t0 = Clock::now();
  MetricSpace space = three_point_example_space();
  SelfMap map = three_point_example_map();
  const PointPair pairs[] = {
      {Point::finite(0), Point::finite(1)},
      {Point::finite(0), Point::finite(2)},
      {Point::finite(1), Point::finite(2)},
  };
  const double want_lhs[] = {1.0, 1.0, 0.0};
  const double want_rhs[] = {1.0, 1.0, 0.5};
  bool ok = true;
  for (int i = 0; i < 3; ++i) {
    PaSums s = pa_sums(orbit_pair_distances(space, map, pairs[i].first,
                                            pairs[i].second, 16));
    ok &= s.S1[2] == want_lhs[i];
    ok &= 0.5 * s.S[2] == want_rhs[i];
  }
  ok &= check_condition(ConditionSpec::path_averaged(0.5, 2, 16), space, map,
                        pairs)
            .verdict == Verdict::HoldsOnSample;
  ok &= tightest_constant(Family::Banach, space, map, pairs).value == 1.0;
  double ms = ms_since(t0);
  ok &= ms < 1.0;
  report("criterion 1: discrete example tables, exact",
         ok, "runtime " + std::to_string(ms) + " ms");
}

// ---- criterion 2: Kannan refutation at (1, 0) ----
void criterion_2() {
  auto t0 = Clock::now();
  MetricSpace space = MetricSpace::real_interval(0.0, 1.0, 1001);
  SelfMap map = SelfMap::square_half();
  Point one = Point::real(1.0), zero = Point::real(0.0);
  PointwiseEval e = evaluate_condition(ConditionSpec::kannan(0.4), space, map,
                                       one, zero);
  double kernel = space.distance(one, map.apply(one)) +
                  space.distance(zero, map.apply(zero));
  bool ok = e.lhs == 0.5 && kernel == 0.5 &&
            std::fabs(e.lhs / kernel - 1.0) <= 1e-15;
  double ms = ms_since(t0);
  ok &= ms < 1.0;
  report("criterion 2: Kannan refutation at (1,0), exact", ok,
         "runtime " + std::to_string(ms) + " ms");
}

// ---- criterion 3: harmonic closed forms up to n = 10^4 ----
void criterion_3() {
  auto t0 = Clock::now();
  const std::uint64_t sweep = 10000;
  MetricSpace space = MetricSpace::harmonic(2 * sweep + 2);
  SelfMap map = SelfMap::successor(2 * sweep + 2);
  double worst_s = 0.0, worst_s1 = 0.0;
  bool tail_ok = true;
  std::uint64_t first_above = 0;
  for (std::uint64_t n = 1; n <= sweep; ++n) {
    PaSums sums = pa_sums(orbit_pair_distances(
        space, map, Point::nat_point(n), Point::nat_point(n + 1), n));
    double nn = static_cast<double>(n);
    double s = sums.S[static_cast<std::size_t>(n)];
    double s1 = sums.S1[static_cast<std::size_t>(n)];
    worst_s = std::max(worst_s, rel_err(s, 1.0 / (2.0 * nn)));
    worst_s1 = std::max(worst_s1,
                        rel_err(s1, nn / ((nn + 1.0) * (2.0 * nn + 1.0))));
    double ratio = s1 / s;
    if (n >= 150 && ratio < 0.99) tail_ok = false;
    if (first_above == 0 && ratio > 0.9) first_above = n;
  }
  double ms = ms_since(t0);
  bool ok = worst_s <= 1e-12 && worst_s1 <= 1e-12 && tail_ok &&
            first_above == 14 && ms < 5000.0;
  report("criterion 3: harmonic closed forms within 1e-12", ok,
         "max rel err " + std::to_string(std::max(worst_s, worst_s1)) +
             ", first ratio>0.9 at n=" + std::to_string(first_above) +
             ", runtime " + std::to_string(ms) + " ms");
}

// ---- criterion 4: averaged-condition refutation for the successor ----
void criterion_4() {
  MetricSpace space = MetricSpace::harmonic(2000);
  SelfMap map = SelfMap::successor(2000);
  std::vector<PointPair> pairs;
  for (std::uint64_t n = 1; n <= 500; ++n)
    pairs.emplace_back(Point::nat_point(n), Point::nat_point(n + 1));
  bool ok = true;
  for (double alpha : {0.5, 0.9, 0.99}) {
    CheckReport r = check_condition(
        ConditionSpec::path_averaged(alpha, 2, 500), space, map, pairs);
    if (r.verdict != Verdict::Violated || !r.witness || !r.witness->n) {
      ok = false;
      continue;
    }
    double m = static_cast<double>(r.witness->x.nat);
    double n = static_cast<double>(*r.witness->n);
    double closed = m * (m + n) / ((m + 1.0) * (m + n + 1.0));
    double measured = r.witness->lhs / (r.witness->rhs / alpha);
    ok &= rel_err(measured, closed) <= 1e-12;
  }
  report("criterion 4: successor violates every alpha in {0.5, 0.9, 0.99}", ok);
}

// ---- criterion 5: Picard convergence for both scenarios ----
void criterion_5() {
  MetricSpace interval = MetricSpace::real_interval(0.0, 1.0, 1001);
  PicardTrace sq =
      run_picard(interval, SelfMap::square_half(), Point::real(1.0), 1e-12);
  bool ok = sq.status == PicardStatus::Converged && sq.limit &&
            sq.limit->value <= 1e-12 && sq.residual <= 1e-12;
  for (std::uint64_t n = 1; n <= 6 && ok; ++n) {
    double expected = 1.0 - std::pow(2.0, 1.0 - std::pow(2.0, double(n)));
    ok &= std::fabs(sq.partial_sum(n) - expected) <= 1e-12;
  }
  ok &= std::fabs(sq.partial_sum(sq.S.size()) - 1.0) <= 1e-9;

  PicardTrace d = run_picard(three_point_example_space(),
                             three_point_example_map(), Point::finite(0));
  ok &= d.status == PicardStatus::Converged && d.limit &&
        *d.limit == Point::finite(2) && d.a.size() == 3 && d.S.back() == 2.0;
  report("criterion 5: Picard convergence with telescoping sums", ok);
}

// ---- criterion 6: proof-chain summability bounds ----
void criterion_6() {
  PicardTrace d = run_picard(three_point_example_space(),
                             three_point_example_map(), Point::finite(0));
  BoundReport bd = check_summability_bound(d, 0.5, 2);
  bool ok = bd.bound_constant == 2.0 && bd.all_pass && bd.final_sum_bounded;

  MetricSpace interval = MetricSpace::real_interval(0.0, 1.0, 1001);
  PicardTrace sq =
      run_picard(interval, SelfMap::square_half(), Point::real(1.0), 1e-12);
  BoundReport bs = check_summability_bound(sq, 0.7, 5);
  ok &= std::fabs(bs.bound_constant - 5.0 / 3.0) <= 1e-12 && bs.all_pass &&
        bs.final_sum_bounded;
  report("criterion 6: summability bound C = 2 (discrete) and 5/3 (square-half)",
         ok);
}

// ---- criteria 7 and 8: Banach => averaged, plus uniqueness ----
struct RandomCase {
  MetricSpace space;
  SelfMap map;
  double k_hat;
  std::uint64_t seed;
};

void criteria_7_and_8() {
  auto t0 = Clock::now();
  std::vector<RandomCase> cases;
  std::uint64_t seed = 0;
  while (cases.size() < 200 && seed < 100000) {
    RandomSpaceSpec spec;
    spec.point_count = 2 + seed % 11;  // 2..12 points
    spec.method = seed % 2 ? RandomSpaceSpec::Method::EuclideanEmbed
                           : RandomSpaceSpec::Method::RepairedMatrix;
    spec.seed = seed;
    MetricSpace space = random_finite_metric(spec);
    SelfMap map = random_self_map(spec.point_count, mix_seed(seed, 77));
    auto pairs = sample_pairs(space, 0);
    double k_hat = tightest_constant(Family::Banach, space, map, pairs).value;
    ++seed;
    if (k_hat >= 0.95) continue;
    cases.push_back(RandomCase{space, map, k_hat, seed - 1});
  }

  std::size_t held = 0;
  for (const auto& c : cases) {
    double alpha = std::clamp(c.k_hat, 1e-9, 0.95);
    auto pairs = sample_pairs(c.space, 0);
    CheckReport r = check_condition(
        ConditionSpec::path_averaged(alpha, 1, 20), c.space, c.map, pairs);
    if (r.verdict == Verdict::HoldsOnSample) ++held;
  }
  double ms = ms_since(t0);
  bool ok7 = cases.size() == 200 && held == 200 && ms < 10000.0;
  report("criterion 7: 200/200 Banach maps satisfy the averaged condition",
         ok7,
         std::to_string(held) + "/" + std::to_string(cases.size()) +
             " held, runtime " + std::to_string(ms) + " ms");

  std::size_t unique_ok = 0;
  for (const auto& c : cases) {
    auto fixed = find_fixed_points(c.space, c.map, c.space.point_count());
    if (fixed.size() != 1) continue;
    bool all_limits_match = true;
    std::mt19937_64 rng(mix_seed(c.seed, 12345));
    for (int s = 0; s < 3; ++s) {
      Point x0 = Point::finite(uniform_index(rng, c.space.point_count()));
      PicardTrace t = run_picard(c.space, c.map, x0);
      all_limits_match &= t.status == PicardStatus::Converged && t.limit &&
                          *t.limit == fixed[0];
    }
    if (all_limits_match) ++unique_ok;
  }
  report("criterion 8: unique fixed point equals the Picard limit",
         unique_ok == cases.size(),
         std::to_string(unique_ok) + "/" + std::to_string(cases.size()));
}

// ---- criterion 9: log-F refutation near (1, 1) ----
void criterion_9() {
  MetricSpace space = MetricSpace::real_interval(0.0, 1.0, 1001);
  SelfMap map = SelfMap::square_half();
  std::vector<PointPair> pairs = sample_pairs(space, 0);
  std::vector<PointPair> corner;
  for (const auto& p : pairs)
    if (p.first.value >= 0.99 && p.second.value >= 0.99) corner.push_back(p);

  bool ok = true;
  for (double tau : {0.1, 0.01, 0.001}) {
    CheckReport r = check_condition(
        ConditionSpec::f_contraction(FKind::Log, tau), space, map, corner);
    ok &= r.verdict == Verdict::Violated && r.witness &&
          r.witness->x.value >= 0.99 && r.witness->y.value >= 0.99;
  }
  double sup_gap = 0.0;
  for (const auto& [x, y] : corner) {
    double d = space.distance(x, y);
    double dt = space.distance(map.apply(x), map.apply(y));
    if (dt <= 0.0) continue;
    sup_gap = std::max(sup_gap, std::log(d) - std::log(dt));
  }
  double bound = std::log(2.0 / 1.98) + 1e-9;
  ok &= !corner.empty() && sup_gap <= bound;
  ok &= f_admissible_tau(FKind::Log, space, map, corner).inf_gap <= bound;
  report("criterion 9: log-F refutation, admissible tau below ln(2/1.98)", ok,
         "sup gap " + std::to_string(sup_gap));
}

// ---- criterion 10: discrepancy diagnostics are reported, not fatal ----
void criterion_10() {
  ScenarioResult sq = repro_square_half();
  bool ok = sq.pass;
  double alpha_hat = -1.0;
  for (const auto& a : sq.assertions)
    if (a.name == "path-averaged tightest alpha at N=5") alpha_hat = a.computed;
  ok &= alpha_hat > 0.55 && alpha_hat < 0.75 && alpha_hat < 1.0;
  bool noted = false;
  for (const auto& n : sq.notes)
    if (n.find("0.4") != std::string::npos) noted = true;
  ok &= noted;

  ScenarioResult succ = repro_successor_harmonic({1000});
  ok &= succ.pass;
  double chat = -1.0;
  for (const auto& a : succ.assertions)
    if (a.name.rfind("chatterjea supremum over", 0) == 0) chat = a.computed;
  ok &= chat > 0.499 && chat < 0.5;
  bool boundary_note = false;
  for (const auto& n : succ.notes)
    if (n.find("boundary") != std::string::npos) boundary_note = true;
  ok &= boundary_note;
  report("criterion 10: discrepancy notes present without failing the run", ok,
         "alpha_hat " + std::to_string(alpha_hat) + ", chatterjea " +
             std::to_string(chat));
}

// ---- criterion 11: byte-identical repro reports ----
void criterion_11() {
  auto render = [] {
    Json doc = Json::array();
    for (const auto& r : repro_all()) doc.push_back(scenario_json(r));
    doc.push_back(table_json(comparison_table()));
    return doc.dump(2);
  };
  std::string a = render();
  std::string b = render();
  report("criterion 11: repeated repro runs are byte-identical", a == b,
         std::to_string(a.size()) + " bytes");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criteria_7_and_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
