// Command-line front end: condition checks, constants, Picard runs, ratio
// profiles, the built-in reproduction scenarios, separation search, and the
// comparison table.  Exit codes: 0 pass, 1 violation/assertion failure,
// 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fixlab/conditions.hpp"
#include "fixlab/errors.hpp"
#include "fixlab/metric_space.hpp"
#include "fixlab/picard.hpp"
#include "fixlab/report.hpp"
#include "fixlab/scenarios.hpp"
#include "fixlab/self_map.hpp"
#include "fixlab/witness.hpp"

using namespace fixlab;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::string json_path;
  std::string csv_path;
  double tol = 1e-12;
  std::uint64_t horizon = 16;
  std::size_t grid = 1001;
  std::uint64_t truncation = 10000;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  return parts;
}

MetricSpace parse_space(const std::string& desc, const GlobalOpts& g) {
  auto parts = split(desc, ':');
  const std::string& kind = parts[0];
  if (kind == "discrete") {
    if (parts.size() != 2) throw InvalidParameter("usage: discrete:<points>");
    return MetricSpace::discrete(std::stoul(parts[1]));
  }
  if (kind == "finite") {
    if (parts.size() != 2) throw InvalidParameter("usage: finite:<csv-path>");
    return MetricSpace::finite_from_csv(parts[1]);
  }
  if (kind == "interval") {
    double lo = 0.0, hi = 1.0;
    if (parts.size() == 3) {
      lo = std::stod(parts[1]);
      hi = std::stod(parts[2]);
    } else if (parts.size() != 1) {
      throw InvalidParameter("usage: interval[:<lo>:<hi>]");
    }
    return MetricSpace::real_interval(lo, hi, g.grid);
  }
  if (kind == "harmonic") return MetricSpace::harmonic(g.truncation);
  throw InvalidParameter("unknown space kind: " + kind);
}

SelfMap parse_map(const std::string& desc, const MetricSpace& space) {
  auto parts = split(desc, ':');
  const std::string& kind = parts[0];
  if (kind == "square-half") return SelfMap::square_half();
  if (kind == "successor") return SelfMap::successor(space.truncation());
  if (kind == "example") return three_point_example_map();
  if (kind == "table") {
    if (parts.size() != 2)
      throw InvalidParameter("usage: table:<i,j,...> or table:<csv-path>");
    if (parts[1].find(',') == std::string::npos &&
        !parts[1].empty() && !std::isdigit(parts[1][0]))
      return SelfMap::finite_table_from_csv(parts[1]);
    std::vector<std::size_t> table;
    for (const auto& cell : split(parts[1], ','))
      table.push_back(std::stoul(cell));
    return SelfMap::finite_table(std::move(table));
  }
  throw InvalidParameter("unknown map kind: " + kind);
}

Point parse_point(const std::string& text, const MetricSpace& space) {
  switch (space.kind()) {
    case MetricSpace::Kind::FiniteExplicit:
      return Point::finite(std::stoul(text));
    case MetricSpace::Kind::RealInterval:
      return Point::real(std::stod(text));
    case MetricSpace::Kind::HarmonicNat:
      if (text == "inf" || text == "infinity") return Point::infinity();
      return Point::nat_point(std::stoull(text));
  }
  throw InvalidParameter("cannot parse point: " + text);
}

std::vector<PointPair> resolve_pairs(const std::vector<std::string>& pair_args,
                                     const MetricSpace& space,
                                     std::uint64_t seed) {
  if (pair_args.empty()) return sample_pairs(space, seed);
  std::vector<PointPair> pairs;
  for (const auto& arg : pair_args) {
    auto parts = split(arg, ',');
    if (parts.size() != 2)
      throw InvalidParameter("pair must be <x>,<y>: " + arg);
    pairs.emplace_back(parse_point(parts[0], space),
                       parse_point(parts[1], space));
  }
  return pairs;
}

ConditionSpec build_spec(const std::string& family_arg, double k, double alpha,
                         std::uint64_t min_n, const std::string& f_arg,
                         double tau, std::uint64_t horizon) {
  auto family = family_from_name(family_arg);
  if (!family) throw InvalidParameter("unknown family: " + family_arg);
  switch (*family) {
    case Family::Banach: return ConditionSpec::banach(k);
    case Family::Kannan: return ConditionSpec::kannan(k);
    case Family::Chatterjea: return ConditionSpec::chatterjea(k);
    case Family::Ciric: return ConditionSpec::ciric(k);
    case Family::FContraction: {
      auto f = f_kind_from_name(f_arg);
      if (!f) throw InvalidParameter("unknown F kind: " + f_arg);
      return ConditionSpec::f_contraction(*f, tau);
    }
    case Family::PathAveraged:
      return ConditionSpec::path_averaged(alpha, min_n, horizon);
  }
  throw InvalidParameter("unknown family");
}

void emit(const GlobalOpts& g, const Json& j, const std::string& csv = "") {
  std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!g.json_path.empty()) write_text_file(g.json_path, text);
  if (!g.csv_path.empty()) {
    if (csv.empty())
      throw InvalidParameter("this command has no CSV output");
    write_text_file(g.csv_path, csv);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contraction-condition verification laboratory"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for sampling and search");
  app.add_option("--json", g.json_path, "write the JSON report here");
  app.add_option("--csv", g.csv_path, "write the CSV artifact here");
  app.add_option("--tol", g.tol, "convergence / fixed-point tolerance");
  app.add_option("--horizon", g.horizon, "orbit horizon H");
  app.add_option("--grid", g.grid, "interval grid resolution");
  app.add_option("--truncation", g.truncation, "harmonic truncation bound");

  std::string space_arg = "interval:0:1", map_arg = "square-half";
  std::string family_arg = "banach", f_arg = "log";
  double k = 0.5, alpha = 0.5, tau = 0.1;
  std::uint64_t min_n = 1;
  std::vector<std::string> pair_args;
  std::string x_arg, y_arg, x0_arg, scenario_arg = "all";
  std::uint64_t max_iter = 1000000;
  std::size_t limit = 4096;
  bool list_fixed = false;
  std::vector<std::string> hold_args, fail_args;
  std::size_t trials = 10000, points = 3;
  std::string method_arg = "repaired";

  auto add_domain = [&](CLI::App* cmd) {
    cmd->add_option("--space", space_arg,
                    "discrete:<n> | finite:<csv> | interval[:lo:hi] | harmonic");
    cmd->add_option("--map", map_arg,
                    "table:<i,j,..|csv> | square-half | successor | example");
  };

  auto* check = app.add_subcommand("check", "check a condition on a sample");
  add_domain(check);
  check->add_option("--family", family_arg, "condition family");
  check->add_option("--k", k, "constant for the pointwise families");
  check->add_option("--alpha", alpha, "path-averaged constant");
  check->add_option("--N,--min-n", min_n, "path-averaged starting index");
  check->add_option("--f", f_arg, "log | log-linear | neg-inv-sqrt");
  check->add_option("--tau", tau, "F-contraction shift");
  check->add_option("--pair", pair_args, "explicit pair <x>,<y> (repeatable)");

  auto* tightest = app.add_subcommand("tightest", "measure the tightest constant");
  add_domain(tightest);
  tightest->add_option("--family", family_arg, "condition family");
  tightest->add_option("--N,--min-n", min_n, "path-averaged starting index");
  tightest->add_option("--pair", pair_args, "explicit pair (repeatable)");

  auto* picard = app.add_subcommand("picard", "run the iteration from x0");
  add_domain(picard);
  picard->add_option("--x0", x0_arg, "starting point")->required();
  picard->add_option("--max-iter", max_iter, "iteration cap");
  picard->add_flag("--fixed-points", list_fixed,
                   "also enumerate fixed points of the map");
  picard->add_option("--limit", limit, "enumeration limit for --fixed-points");

  auto* profile = app.add_subcommand("profile", "orbit-sum ratio profile");
  add_domain(profile);
  profile->add_option("--x", x_arg, "first point")->required();
  profile->add_option("--y", y_arg, "second point")->required();

  auto* repro = app.add_subcommand("repro", "run a built-in scenario");
  repro->add_option("scenario", scenario_arg,
                    "example-discrete | square-half | successor-harmonic | all");

  auto* search = app.add_subcommand("search", "random separation search");
  search->add_option("--must-hold", hold_args, "families that must be members");
  search->add_option("--must-fail", fail_args, "families that must not be");
  search->add_option("--trials", trials, "number of seeded trials");
  search->add_option("--points", points, "points per generated space");
  search->add_option("--method", method_arg, "repaired | euclidean");

  auto* table = app.add_subcommand("table", "regenerate the comparison table");

  // Global options may appear after the subcommand name.
  for (CLI::App* sub : {check, tightest, picard, profile, repro, search, table})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      MetricSpace space = parse_space(space_arg, g);
      SelfMap map = parse_map(map_arg, space);
      ConditionSpec spec =
          build_spec(family_arg, k, alpha, min_n, f_arg, tau, g.horizon);
      auto pairs = resolve_pairs(pair_args, space, g.seed);
      CheckReport report = check_condition(spec, space, map, pairs);
      emit(g, check_report_json(report, space, map));
      return report.verdict == Verdict::HoldsOnSample ? 0 : 1;
    }
    if (tightest->parsed()) {
      MetricSpace space = parse_space(space_arg, g);
      SelfMap map = parse_map(map_arg, space);
      auto family = family_from_name(family_arg);
      if (!family) throw InvalidParameter("unknown family: " + family_arg);
      auto pairs = resolve_pairs(pair_args, space, g.seed);
      TightestResult result = tightest_constant(*family, space, map, pairs,
                                                min_n, g.horizon);
      emit(g, tightest_json(result, *family, space, map));
      return 0;
    }
    if (picard->parsed()) {
      MetricSpace space = parse_space(space_arg, g);
      SelfMap map = parse_map(map_arg, space);
      PicardTrace trace =
          run_picard(space, map, parse_point(x0_arg, space), g.tol, max_iter);
      Json j = picard_json(trace, space, map);
      if (list_fixed) {
        Json arr = Json::array();
        for (const Point& p : find_fixed_points(space, map, limit, g.tol))
          arr.push_back(point_json(p));
        j["fixed_points"] = arr;
      }
      emit(g, j);
      return trace.status == PicardStatus::Converged ? 0 : 1;
    }
    if (profile->parsed()) {
      MetricSpace space = parse_space(space_arg, g);
      SelfMap map = parse_map(map_arg, space);
      auto rows = pa_ratio_profile(space, map, parse_point(x_arg, space),
                                   parse_point(y_arg, space), g.horizon);
      emit(g, profile_json(rows, space, map), profile_csv(rows));
      return 0;
    }
    if (repro->parsed()) {
      std::vector<ScenarioResult> results;
      if (scenario_arg == "example-discrete")
        results.push_back(repro_example_discrete());
      else if (scenario_arg == "square-half")
        results.push_back(repro_square_half({g.grid, g.seed}));
      else if (scenario_arg == "successor-harmonic")
        results.push_back(repro_successor_harmonic());
      else if (scenario_arg == "all")
        results = repro_all();
      else
        throw InvalidParameter("unknown scenario: " + scenario_arg);
      Json j = Json::array();
      bool pass = true;
      for (const auto& r : results) {
        j.push_back(scenario_json(r));
        pass &= r.pass;
      }
      emit(g, results.size() == 1 ? j[0] : j);
      return pass ? 0 : 1;
    }
    if (search->parsed()) {
      SeparationQuery query;
      for (const auto& name : hold_args) {
        auto f = family_from_name(name);
        if (!f) throw InvalidParameter("unknown family: " + name);
        query.must_hold.push_back(*f);
      }
      for (const auto& name : fail_args) {
        auto f = family_from_name(name);
        if (!f) throw InvalidParameter("unknown family: " + name);
        query.must_fail.push_back(*f);
      }
      query.trials = trials;
      query.seed = g.seed;
      query.point_count = points;
      query.method = method_arg == "euclidean"
                         ? RandomSpaceSpec::Method::EuclideanEmbed
                         : RandomSpaceSpec::Method::RepairedMatrix;
      auto witnesses = search_separation(query);
      emit(g, separation_json(witnesses, query));
      return 0;
    }
    if (table->parsed()) {
      ComparisonTable t = comparison_table(g.seed);
      emit(g, table_json(t), table_csv(t));
      std::cout << "\n" << table_markdown(t);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
