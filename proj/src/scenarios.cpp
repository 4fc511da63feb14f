#include "fixlab/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fixlab/errors.hpp"
#include "fixlab/tolerance.hpp"

namespace fixlab {

namespace {

void add_assertion(ScenarioResult& result, std::string name, double computed,
                   double expected, double tolerance, std::string basis) {
  Assertion a;
  a.name = std::move(name);
  a.computed = computed;
  a.expected = expected;
  a.tolerance = tolerance;
  a.basis = std::move(basis);
  a.pass = tolerance == 0.0 ? computed == expected
                            : std::fabs(computed - expected) <= tolerance;
  result.pass &= a.pass;
  result.assertions.push_back(std::move(a));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

MetricSpace three_point_example_space() { return MetricSpace::discrete(3); }

SelfMap three_point_example_map() { return SelfMap::finite_table({1, 2, 2}); }

ScenarioResult repro_example_discrete() {
  ScenarioResult result;
  result.id = "example-discrete";
  MetricSpace space = three_point_example_space();
  SelfMap map = three_point_example_map();
  const std::uint64_t horizon = 16;

  const PointPair pairs[] = {
      {Point::finite(0), Point::finite(1)},
      {Point::finite(0), Point::finite(2)},
      {Point::finite(1), Point::finite(2)},
  };
  const double expected_lhs[] = {1.0, 1.0, 0.0};
  const double expected_rhs[] = {1.0, 1.0, 0.5};

  for (std::size_t i = 0; i < 3; ++i) {
    const auto& [x, y] = pairs[i];
    PaSums sums = pa_sums(orbit_pair_distances(space, map, x, y, horizon));
    std::string tag =
        "pair (" + to_string(x) + "," + to_string(y) + ") at n=2";
    add_assertion(result, tag + " lhs", sums.S1[2], expected_lhs[i], 0.0,
                  "0/1 distances, sums exact");
    add_assertion(result, tag + " rhs", 0.5 * sums.S[2], expected_rhs[i], 0.0,
                  "0/1 distances, sums exact");
    // Both orbits sit at the fixed point from step 2 on, so the sums freeze.
    double drift = 0.0;
    for (std::uint64_t n = 3; n <= horizon; ++n) {
      drift = std::max(drift, std::fabs(sums.S[n] - sums.S[2]));
      drift = std::max(drift, std::fabs(sums.S1[n] - sums.S1[2]));
    }
    add_assertion(result, tag + " sums frozen beyond n=2", drift, 0.0, 0.0,
                  "orbit reaches the fixed point in two steps");
  }

  ConditionSpec pa = ConditionSpec::path_averaged(0.5, 2, horizon);
  CheckReport report = check_condition(pa, space, map, pairs, "all 3 pairs");
  add_assertion(result, "path-averaged holds at (alpha=1/2, N=2)",
                report.verdict == Verdict::HoldsOnSample ? 1.0 : 0.0, 1.0, 0.0,
                "direct check over all pairs and n in [2,16]");

  TightestResult banach =
      tightest_constant(Family::Banach, space, map, pairs);
  add_assertion(result, "banach tightest constant", banach.value, 1.0, 0.0,
                "d(T0,T1)=d(0,1)=1 attained");
  add_assertion(result, "banach witness is pair (0,1)",
                banach.witness.x == Point::finite(0) &&
                        banach.witness.y == Point::finite(1)
                    ? 1.0
                    : 0.0,
                1.0, 0.0, "lexicographically first attaining pair");
  return result;
}

ScenarioResult repro_square_half(const SquareHalfOptions& opts) {
  ScenarioResult result;
  result.id = "square-half";
  MetricSpace space = MetricSpace::real_interval(0.0, 1.0, opts.grid);
  SelfMap map = SelfMap::square_half();

  // Kannan refutation at (1,0).
  Point one = Point::real(1.0), zero = Point::real(0.0);
  ConditionSpec kannan = ConditionSpec::kannan(0.4);
  PointwiseEval ev = evaluate_condition(kannan, space, map, one, zero);
  add_assertion(result, "kannan lhs at (1,0)", ev.lhs, 0.5, 0.0,
                "d(1/2, 0)");
  double kernel = space.distance(one, map.apply(one)) +
                  space.distance(zero, map.apply(zero));
  add_assertion(result, "kannan displacement kernel at (1,0)", kernel, 0.5,
                0.0, "d(1,1/2) + d(0,0)");
  add_assertion(result, "implied kannan constant", ev.lhs / kernel, 1.0,
                1e-15, "1/2 <= k/2 forces k >= 1");

  std::vector<PointPair> pairs = sample_pairs(space, opts.seed);
  double step = 1.0 / static_cast<double>(opts.grid - 1);

  // Banach ratio is (x+y)/2; its grid supremum sits at the top adjacent pair.
  TightestResult banach = tightest_constant(Family::Banach, space, map, pairs);
  add_assertion(result, "banach grid supremum", banach.value,
                1.0 - step / 2.0, 1e-9,
                "ratio (x+y)/2 maximized at the pair (1-h, 1)");
  result.notes.push_back(
      "banach ratio approaches 1 as x,y -> 1; the grid supremum " +
      fmt(banach.value) + " is resolution-limited, not a true bound");

  // Log-F refutation: the gap ln(2/(x+y)) shrinks to 0 near (1,1), so any
  // fixed tau fails there.  Checked on the corner subsample x,y >= 0.99.
  std::vector<PointPair> corner;
  for (const auto& p : pairs)
    if (p.first.value >= 0.99 && p.second.value >= 0.99) corner.push_back(p);
  for (double tau : {0.1, 0.01, 0.001}) {
    ConditionSpec fc = ConditionSpec::f_contraction(FKind::Log, tau);
    CheckReport report =
        check_condition(fc, space, map, corner, "grid pairs with x,y >= 0.99");
    std::string tag = "log-F violated at tau=" + fmt(tau);
    add_assertion(result, tag,
                  report.verdict == Verdict::Violated ? 1.0 : 0.0, 1.0, 0.0,
                  "tau exceeds ln(2/(x+y)) near (1,1)");
    bool near_one = report.witness && report.witness->x.value >= 0.99 &&
                    report.witness->y.value >= 0.99;
    add_assertion(result, tag + ", witness has x,y >= 0.99",
                  near_one ? 1.0 : 0.0, 1.0, 0.0,
                  "violations require x+y > 2 exp(-tau)");
  }

  // Measured path-averaged constant at N=5.
  TightestResult pa = tightest_constant(Family::PathAveraged, space, map,
                                        pairs, 5, 16);
  add_assertion(result, "path-averaged tightest alpha at N=5", pa.value, 0.65,
                0.10, "orbit-derivative series at x,y -> 1 gives ~0.61");
  add_assertion(result, "path-averaged constant below 1",
                pa.value < 1.0 ? 1.0 : 0.0, 1.0, 0.0, "measured");
  result.notes.push_back(
      "measured tightest alpha at N=5 is " + fmt(pa.value) +
      ", above the nominal uniform bound 0.4 sometimes quoted for this map; "
      "the reported value is the measured one");
  return result;
}

ScenarioResult repro_successor_harmonic(const SuccessorOptions& opts) {
  ScenarioResult result;
  result.id = "successor-harmonic";
  const std::uint64_t sweep = opts.sweep_max;
  const std::uint64_t truncation = 2 * sweep + 2;
  MetricSpace space = MetricSpace::harmonic(truncation);
  SelfMap map = SelfMap::successor(truncation);

  // Adjacent-pair sweep: S[n] = 1/(2n), S1[n] = n/((n+1)(2n+1)), and the
  // ratio 2n^2/(2n^2+3n+1) for the pair (n, n+1) at horizon index n.
  double max_rel_s = 0.0, max_rel_s1 = 0.0;
  double min_ratio_tail = 1.0;
  std::uint64_t first_above_09 = 0;
  for (std::uint64_t n = 1; n <= sweep; ++n) {
    Point x = Point::nat_point(n), y = Point::nat_point(n + 1);
    PaSums sums = pa_sums(orbit_pair_distances(space, map, x, y, n));
    double nn = static_cast<double>(n);
    double s = sums.S[static_cast<std::size_t>(n)];
    double s1 = sums.S1[static_cast<std::size_t>(n)];
    max_rel_s = std::max(max_rel_s, rel_err(s, 1.0 / (2.0 * nn)));
    max_rel_s1 =
        std::max(max_rel_s1, rel_err(s1, nn / ((nn + 1.0) * (2.0 * nn + 1.0))));
    double ratio = s1 / s;
    if (n >= 150) min_ratio_tail = std::min(min_ratio_tail, ratio);
    if (first_above_09 == 0 && ratio > 0.9) first_above_09 = n;
  }
  add_assertion(result, "max relative error of S[n] vs 1/(2n)", max_rel_s, 0.0,
                1e-12, "telescoping closed form");
  add_assertion(result, "max relative error of S1[n] vs n/((n+1)(2n+1))",
                max_rel_s1, 0.0, 1e-12, "telescoping closed form");
  add_assertion(result, "ratio >= 0.99 for n >= 150",
                min_ratio_tail >= 0.99 ? 1.0 : 0.0, 1.0, 0.0,
                "2n^2/(2n^2+3n+1) exceeds 0.99 from n=148 on");
  add_assertion(result, "smallest n with ratio > 0.9",
                static_cast<double>(first_above_09), 14.0, 0.0,
                "scan of the closed-form ratio");
  Point ten = Point::nat_point(10), eleven = Point::nat_point(11);
  auto profile = pa_ratio_profile(space, map, ten, eleven, 10);
  add_assertion(result, "ratio at n=10 for pair (10,11)",
                profile.back().rho.value_or(-1.0), 200.0 / 231.0, 1e-12,
                "closed form 2n^2/(2n^2+3n+1) at n=10");
  result.notes.push_back(
      "the ratio profile increases to 1, so no uniform alpha < 1 exists: "
      "the path-averaged condition fails for this map");

  // Chatterjea constant over adjacent pairs: n/(2(n+1)), supremum unattained.
  std::vector<PointPair> adjacent;
  for (std::uint64_t n = 1; n <= 1000; ++n)
    adjacent.emplace_back(Point::nat_point(n), Point::nat_point(n + 1));
  TightestResult chat =
      tightest_constant(Family::Chatterjea, space, map, adjacent);
  add_assertion(result, "chatterjea supremum over (n,n+1), n<=1000",
                chat.value, 1000.0 / 2002.0, 1e-12,
                "closed form n/(2(n+1)) at n=1000");
  add_assertion(result, "chatterjea supremum inside (0.499, 0.5)",
                chat.value > 0.499 && chat.value < 0.5 ? 1.0 : 0.0, 1.0, 0.0,
                "measured");
  result.notes.push_back(
      "boundary: chatterjea constant " + fmt(chat.value) +
      " increases toward 1/2 and the supremum is unattained; no fixed "
      "k < 1/2 dominates the whole family");

  // Ciric ratio equals mn/((m+1)(n+1)) pair by pair.
  double max_rel_ciric = 0.0;
  for (std::uint64_t m = 1; m <= 200; ++m)
    for (std::uint64_t n = m + 1; n <= 200; ++n) {
      Point pm = Point::nat_point(m), pn = Point::nat_point(n);
      TightestResult one_pair = tightest_constant(
          Family::Ciric, space, map, std::vector<PointPair>{{pm, pn}});
      double mm = static_cast<double>(m), nn = static_cast<double>(n);
      max_rel_ciric = std::max(
          max_rel_ciric,
          rel_err(one_pair.value, mm * nn / ((mm + 1.0) * (nn + 1.0))));
    }
  add_assertion(result, "ciric per-pair ratio vs mn/((m+1)(n+1))",
                max_rel_ciric, 0.0, 1e-12,
                "the max term is d(m,n) for every pair m < n");
  result.notes.push_back(
      "boundary: ciric ratios approach 1 along m,n -> inf, so any fixed "
      "k < 1 eventually fails");

  // Path-averaged refutation with explicit witnesses.
  std::vector<PointPair> pa_pairs;
  for (std::uint64_t n = 1; n <= 500; ++n)
    pa_pairs.emplace_back(Point::nat_point(n), Point::nat_point(n + 1));
  for (double alpha : {0.5, 0.9, 0.99}) {
    ConditionSpec pa = ConditionSpec::path_averaged(alpha, 2, 500);
    CheckReport report =
        check_condition(pa, space, map, pa_pairs, "(n,n+1), n<=500");
    std::string tag = "path-averaged violated at alpha=" + fmt(alpha);
    add_assertion(result, tag,
                  report.verdict == Verdict::Violated ? 1.0 : 0.0, 1.0, 0.0,
                  "ratios approach 1");
    if (report.witness && report.witness->n) {
      double m = static_cast<double>(report.witness->x.nat);
      double n = static_cast<double>(*report.witness->n);
      double closed = m * (m + n) / ((m + 1.0) * (m + n + 1.0));
      double measured =
          report.witness->lhs / (report.witness->rhs / alpha);
      add_assertion(result, tag + ", witness ratio vs closed form",
                    rel_err(measured, closed), 0.0, 1e-12,
                    "m(m+n)/((m+1)(m+n+1)) for the pair (m, m+1)");
    } else {
      add_assertion(result, tag + ", witness present", 0.0, 1.0, 0.0,
                    "a violation must carry a witness");
    }
  }
  return result;
}

std::vector<ScenarioResult> repro_all() {
  return {repro_example_discrete(), repro_square_half(),
          repro_successor_harmonic()};
}

namespace {

std::string membership_label(double constant, double bound, double slack) {
  if (constant < bound - slack) return "member";
  if (constant < bound) return "boundary";
  return "non-member";
}

struct ColumnInput {
  std::string name;
  MetricSpace space;
  SelfMap map;
  std::vector<PointPair> pointwise_pairs;
  std::vector<PointPair> pa_pairs;
  std::uint64_t pa_min_n, pa_horizon;
  double slack;  // sampling resolution near the admissible bound
};

TableCell pointwise_cell(const ColumnInput& col, Family family, double bound) {
  TightestResult t = tightest_constant(family, col.space, col.map,
                                       col.pointwise_pairs);
  return {membership_label(t.value, bound, col.slack), t.value};
}

}  // namespace

ComparisonTable comparison_table(std::uint64_t seed) {
  std::vector<ColumnInput> cols;

  {
    ColumnInput c{"example-discrete", three_point_example_space(),
                  three_point_example_map(), {}, {}, 2, 16, 10.0 * kEps};
    c.pointwise_pairs = sample_pairs(c.space, seed);
    c.pa_pairs = c.pointwise_pairs;
    cols.push_back(std::move(c));
  }
  {
    MetricSpace interval = MetricSpace::real_interval(0.0, 1.0, 1001);
    ColumnInput c{"square-half", interval, SelfMap::square_half(),
                  {}, {}, 5, 16, 1.0 / 1000.0};
    c.pointwise_pairs = sample_pairs(c.space, seed);
    c.pa_pairs = c.pointwise_pairs;
    cols.push_back(std::move(c));
  }
  {
    MetricSpace harmonic = MetricSpace::harmonic(10000);
    ColumnInput c{"successor-harmonic", harmonic,
                  SelfMap::successor(10000), {}, {}, 2, 2000, 2.0 / 1000.0};
    c.pointwise_pairs = sample_pairs(c.space, seed);
    for (std::uint64_t n = 1; n <= 2000; ++n)
      c.pa_pairs.emplace_back(Point::nat_point(n), Point::nat_point(n + 1));
    cols.push_back(std::move(c));
  }

  ComparisonTable table;
  for (const auto& c : cols) table.scenarios.push_back(c.name);

  ComparisonTable::Row banach{"banach", {}, "yes (measured)", "no"};
  ComparisonTable::Row kannan{"kannan", {}, "no", "no"};
  ComparisonTable::Row chatterjea{"chatterjea", {}, "no", "open"};
  ComparisonTable::Row ciric{"ciric", {}, "no", "open"};
  ComparisonTable::Row fcon{"f-contraction", {}, "open", "no"};
  ComparisonTable::Row pa{"path-averaged", {}, "-", "-"};

  for (const auto& c : cols) {
    banach.cells.push_back(pointwise_cell(c, Family::Banach, 1.0));
    kannan.cells.push_back(pointwise_cell(c, Family::Kannan, 0.5));
    chatterjea.cells.push_back(pointwise_cell(c, Family::Chatterjea, 0.5));
    ciric.cells.push_back(pointwise_cell(c, Family::Ciric, 1.0));

    double best_gap = -std::numeric_limits<double>::infinity();
    for (FKind f : {FKind::Log, FKind::LogPlusLinear, FKind::NegInvSqrt}) {
      FGapResult gap = f_admissible_tau(f, c.space, c.map, c.pointwise_pairs);
      double v = gap.applicable == 0
                     ? std::numeric_limits<double>::infinity()
                     : gap.inf_gap;
      best_gap = std::max(best_gap, v);
    }
    // For F the measured quantity is the admissible-tau infimum; membership
    // needs it positive by more than the resolution slack.
    std::string label = best_gap > c.slack
                            ? "member"
                            : (best_gap > 0.0 ? "boundary" : "non-member");
    fcon.cells.push_back({label, best_gap});

    TightestResult t = tightest_constant(Family::PathAveraged, c.space, c.map,
                                         c.pa_pairs, c.pa_min_n, c.pa_horizon);
    pa.cells.push_back({membership_label(t.value, 1.0, c.slack), t.value});
  }

  table.rows = {banach, kannan, chatterjea, ciric, fcon, pa};
  return table;
}

std::string table_markdown(const ComparisonTable& table) {
  std::ostringstream os;
  os << "| family |";
  for (const auto& s : table.scenarios) os << " " << s << " |";
  os << " implies path-averaged | path-averaged implies |\n";
  os << "|---|";
  for (std::size_t i = 0; i < table.scenarios.size(); ++i) os << "---|";
  os << "---|---|\n";
  for (const auto& row : table.rows) {
    os << "| " << row.family << " |";
    for (const auto& cell : row.cells)
      os << " " << cell.label << " (" << fmt(cell.constant) << ") |";
    os << " " << row.implies_pa << " | " << row.pa_implies << " |\n";
  }
  return os.str();
}

std::string table_csv(const ComparisonTable& table) {
  std::ostringstream os;
  os << "family";
  for (const auto& s : table.scenarios)
    os << "," << s << "_verdict," << s << "_constant";
  os << ",implies_pa,pa_implies\n";
  os.precision(17);
  for (const auto& row : table.rows) {
    os << row.family;
    for (const auto& cell : row.cells)
      os << "," << cell.label << "," << cell.constant;
    os << "," << row.implies_pa << "," << row.pa_implies << "\n";
  }
  return os.str();
}

}  // namespace fixlab
