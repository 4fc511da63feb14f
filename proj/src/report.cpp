#include "fixlab/report.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fixlab/errors.hpp"

namespace fixlab {

Json point_json(const Point& p) {
  switch (p.kind) {
    case PointKind::FiniteIndex:
      return Json{{"kind", "finite_index"}, {"index", p.index}};
    case PointKind::RealScalar:
      return Json{{"kind", "real"}, {"value", p.value}};
    case PointKind::ExtendedNat:
      if (p.infinite) return Json{{"kind", "extended_nat"}, {"infinite", true}};
      return Json{{"kind", "extended_nat"}, {"n", p.nat}};
  }
  return Json{};
}

Json space_json(const MetricSpace& space) {
  Json j;
  switch (space.kind()) {
    case MetricSpace::Kind::FiniteExplicit:
      j["kind"] = "finite_explicit";
      j["params"] = {{"point_count", space.point_count()},
                     {"matrix", space.matrix()}};
      break;
    case MetricSpace::Kind::RealInterval:
      j["kind"] = "real_interval";
      j["params"] = {{"lower", space.lower()},
                     {"upper", space.upper()},
                     {"grid_points", space.grid_points()}};
      break;
    case MetricSpace::Kind::HarmonicNat:
      j["kind"] = "harmonic_nat";
      j["params"] = {{"truncation", space.truncation()}};
      break;
  }
  return j;
}

Json map_json(const SelfMap& map) {
  Json j;
  switch (map.kind()) {
    case SelfMap::Kind::FiniteTable:
      j["kind"] = "finite_table";
      j["params"] = {{"table", map.table()}};
      break;
    case SelfMap::Kind::SquareHalf:
      j["kind"] = "square_half";
      j["params"] = Json::object();
      break;
    case SelfMap::Kind::Successor:
      j["kind"] = "successor";
      j["params"] = Json::object();
      if (map.saturation()) j["params"]["saturation"] = *map.saturation();
      break;
    case SelfMap::Kind::Custom:
      j["kind"] = "custom";
      j["params"] = Json::object();
      break;
  }
  return j;
}

Json spec_json(const ConditionSpec& spec) {
  Json j{{"family", family_name(spec.family)}};
  switch (spec.family) {
    case Family::Banach:
    case Family::Kannan:
    case Family::Chatterjea:
    case Family::Ciric:
      j["k"] = spec.k;
      break;
    case Family::FContraction:
      j["f"] = f_kind_name(spec.f);
      j["tau"] = spec.tau;
      break;
    case Family::PathAveraged:
      j["alpha"] = spec.alpha;
      j["N"] = spec.min_n;
      j["horizon"] = spec.horizon;
      break;
  }
  return j;
}

Json witness_json(const Witness& w) {
  Json j{{"pair", Json::array({point_json(w.x), point_json(w.y)})}};
  if (w.n)
    j["n"] = *w.n;
  else
    j["n"] = nullptr;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  return j;
}

namespace {

Json report_shell(const std::string& command, const MetricSpace& space,
                  const SelfMap& map) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["space"] = space_json(space);
  j["map"] = map_json(map);
  return j;
}

}  // namespace

Json check_report_json(const CheckReport& report, const MetricSpace& space,
                       const SelfMap& map) {
  Json j = report_shell("check", space, map);
  j["spec"] = spec_json(report.spec);
  j["verdict"] = report.verdict == Verdict::HoldsOnSample ? "holds-on-sample"
                                                          : "violated";
  j["witness"] = report.witness ? witness_json(*report.witness) : Json(nullptr);
  j["measurements"] = Json::array();
  Json notes = Json::array();
  notes.push_back("pairs checked: " + std::to_string(report.pairs_checked));
  if (!report.sample_desc.empty()) notes.push_back(report.sample_desc);
  if (report.flags.underflow) notes.push_back("orbit underflow flushed to 0");
  if (report.flags.saturated) notes.push_back("successor saturated at bound");
  j["notes"] = notes;
  return j;
}

Json tightest_json(const TightestResult& result, Family family,
                   const MetricSpace& space, const SelfMap& map) {
  Json j = report_shell("tightest", space, map);
  j["spec"] = Json{{"family", family_name(family)}};
  j["verdict"] = "measured";
  j["witness"] = witness_json(result.witness);
  j["measurements"] = Json::array({Json{{"name", "tightest_constant"},
                                        {"value", result.value},
                                        {"expected", nullptr},
                                        {"provenance", "measured"},
                                        {"tolerance", nullptr},
                                        {"pass", nullptr}}});
  j["notes"] = Json::array(
      {"instances with positive denominator: " +
       std::to_string(result.defined_count)});
  return j;
}

Json picard_json(const PicardTrace& trace, const MetricSpace& space,
                 const SelfMap& map) {
  Json j = report_shell("picard", space, map);
  j["spec"] = nullptr;
  switch (trace.status) {
    case PicardStatus::Converged: j["verdict"] = "converged"; break;
    case PicardStatus::MaxIterReached: j["verdict"] = "max-iter"; break;
    case PicardStatus::Cycled: j["verdict"] = "cycled"; break;
  }
  j["witness"] = nullptr;
  j["x0"] = point_json(trace.x0);
  j["limit"] = trace.limit ? point_json(*trace.limit) : Json(nullptr);
  j["residual"] = trace.residual;
  j["a"] = trace.a;
  j["S"] = trace.S;
  j["iterations"] = trace.a.size();
  j["measurements"] = Json::array();
  j["notes"] = Json::array();
  return j;
}

Json bound_report_json(const BoundReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows)
    rows.push_back(Json{{"n", row.n},
                        {"S_n", row.S_n},
                        {"a_n", row.a_n},
                        {"telescoping_ok", row.telescoping_ok},
                        {"bounded_ok", row.bounded_ok}});
  return Json{{"a0", report.a0},
              {"C", report.bound_constant},
              {"rows", rows},
              {"final_sum_bounded", report.final_sum_bounded},
              {"all_pass", report.all_pass}};
}

Json profile_json(const std::vector<ProfileRow>& rows,
                  const MetricSpace& space, const SelfMap& map) {
  Json j = report_shell("profile", space, map);
  j["spec"] = nullptr;
  j["verdict"] = "measured";
  j["witness"] = nullptr;
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json r{{"n", row.n}, {"S", row.S}, {"S1", row.S1}};
    r["rho"] = row.rho ? Json(*row.rho) : Json(nullptr);
    arr.push_back(r);
  }
  j["profile"] = arr;
  j["measurements"] = Json::array();
  j["notes"] = Json::array();
  return j;
}

Json classification_json(const Classification& cls) {
  auto verdict = [](const FamilyVerdict& v) {
    return Json{{"constant", v.constant},
                {"member", v.member},
                {"boundary", v.boundary}};
  };
  Json j{{"banach", verdict(cls.banach)},
         {"kannan", verdict(cls.kannan)},
         {"chatterjea", verdict(cls.chatterjea)},
         {"ciric", verdict(cls.ciric)},
         {"path_averaged", verdict(cls.pa)}};
  j["path_averaged"]["best_N"] = cls.pa_best_min_n;
  j["f_contraction"] = Json{{"gaps",
                             Json{{"log", cls.f_gaps[0]},
                                  {"log-linear", cls.f_gaps[1]},
                                  {"neg-inv-sqrt", cls.f_gaps[2]}}},
                            {"member", cls.f_member},
                            {"boundary", cls.f_boundary}};
  return j;
}

Json separation_json(const std::vector<SeparationWitness>& witnesses,
                     const SeparationQuery& query) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "search";
  Json hold = Json::array(), fail = Json::array();
  for (Family f : query.must_hold) hold.push_back(family_name(f));
  for (Family f : query.must_fail) fail.push_back(family_name(f));
  j["query"] = Json{{"must_hold", hold},
                    {"must_fail", fail},
                    {"trials", query.trials},
                    {"seed", query.seed},
                    {"point_count", query.point_count}};
  j["verdict"] = witnesses.empty() ? "no witness found in trials"
                                   : "witnesses found";
  Json arr = Json::array();
  for (const auto& w : witnesses) {
    arr.push_back(Json{{"trial", w.trial},
                       {"space", space_json(w.space)},
                       {"map", map_json(w.map)},
                       {"classification", classification_json(w.classification)}});
  }
  j["witnesses"] = arr;
  j["notes"] = Json::array();
  return j;
}

Json scenario_json(const ScenarioResult& result) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["scenario"] = result.id;
  j["verdict"] = result.pass ? "pass" : "fail";
  Json arr = Json::array();
  for (const auto& a : result.assertions)
    arr.push_back(Json{{"name", a.name},
                       {"value", a.computed},
                       {"expected", a.expected},
                       {"provenance", a.basis},
                       {"tolerance", a.tolerance},
                       {"pass", a.pass}});
  j["measurements"] = arr;
  j["notes"] = result.notes;
  return j;
}

Json table_json(const ComparisonTable& table) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "table";
  j["scenarios"] = table.scenarios;
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json cells = Json::array();
    for (const auto& cell : row.cells)
      cells.push_back(Json{{"label", cell.label}, {"constant", cell.constant}});
    rows.push_back(Json{{"family", row.family},
                        {"cells", cells},
                        {"implies_pa", row.implies_pa},
                        {"pa_implies", row.pa_implies}});
  }
  j["rows"] = rows;
  return j;
}

std::string profile_csv(const std::vector<ProfileRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "n,S_n,S1_n,rho_n\n";
  for (const auto& row : rows) {
    os << row.n << "," << row.S << "," << row.S1 << ",";
    if (row.rho) os << *row.rho;
    os << "\n";
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw LoadError("cannot write " + path);
  out << content;
  if (!out) throw LoadError("failed writing " + path);
}

}  // namespace fixlab
