#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "fixlab/conditions.hpp"
#include "fixlab/metric_space.hpp"
#include "fixlab/picard.hpp"
#include "fixlab/scenarios.hpp"
#include "fixlab/self_map.hpp"
#include "fixlab/witness.hpp"

namespace fixlab {

// Stable machine-readable reports.  Field order is fixed so identical runs
// produce byte-identical files.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json point_json(const Point& p);
Json space_json(const MetricSpace& space);
Json map_json(const SelfMap& map);
Json spec_json(const ConditionSpec& spec);
Json witness_json(const Witness& w);
Json check_report_json(const CheckReport& report, const MetricSpace& space,
                       const SelfMap& map);
Json tightest_json(const TightestResult& result, Family family,
                   const MetricSpace& space, const SelfMap& map);
Json picard_json(const PicardTrace& trace, const MetricSpace& space,
                 const SelfMap& map);
Json bound_report_json(const BoundReport& report);
Json profile_json(const std::vector<ProfileRow>& rows,
                  const MetricSpace& space, const SelfMap& map);
Json classification_json(const Classification& cls);
Json separation_json(const std::vector<SeparationWitness>& witnesses,
                     const SeparationQuery& query);
Json scenario_json(const ScenarioResult& result);
Json table_json(const ComparisonTable& table);

/// Columns n, S_n, S1_n, rho_n (empty where undefined); header included.
std::string profile_csv(const std::vector<ProfileRow>& rows);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace fixlab
