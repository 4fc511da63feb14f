#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fixlab/conditions.hpp"
#include "fixlab/metric_space.hpp"
#include "fixlab/self_map.hpp"

namespace fixlab {

struct Assertion {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;  // 0 means exact equality
  bool pass = false;
  std::string basis;       // how the expected value was obtained
};

struct ScenarioResult {
  std::string id;
  std::vector<Assertion> assertions;
  std::vector<std::string> notes;  // diagnostics; never flip the verdict
  bool pass = true;
};

/// The 3-point space {0,1,2} with the 0/1 metric and the map 0->1, 1->2, 2->2.
MetricSpace three_point_example_space();
SelfMap three_point_example_map();

/// Pair tables of the 3-point example at n=2, stability beyond n=2, the
/// path-averaged check at (alpha=1/2, N=2), and the Banach constant 1.
ScenarioResult repro_example_discrete();

struct SquareHalfOptions {
  std::size_t grid = 1001;
  std::uint64_t seed = 0;
};

/// x -> x^2/2 on [0,1]: Kannan refutation at (1,0), Banach ratio (x+y)/2
/// approaching 1, log-F refutation, and the measured path-averaged constant
/// at N=5 with its discrepancy note.
ScenarioResult repro_square_half(const SquareHalfOptions& opts = {});

struct SuccessorOptions {
  std::uint64_t sweep_max = 10000;  // largest adjacent pair index checked
};

/// n -> n+1 on the harmonic naturals: closed-form orbit sums, the ratio
/// profile limit, Chatterjea/Ciric boundary constants, and the
/// path-averaged refutation.
ScenarioResult repro_successor_harmonic(const SuccessorOptions& opts = {});

std::vector<ScenarioResult> repro_all();

struct TableCell {
  std::string label;      // member / non-member / boundary
  double constant = 0.0;  // measured tightest constant (or inf-gap for F)
};

struct ComparisonTable {
  std::vector<std::string> scenarios;  // column headers
  struct Row {
    std::string family;
    std::vector<TableCell> cells;
    std::string implies_pa;  // static annotation
    std::string pa_implies;  // static annotation
  };
  std::vector<Row> rows;
};

/// Membership verdicts with measured constants for the three built-in
/// scenarios; boundary labels use the sampling resolution as slack.
ComparisonTable comparison_table(std::uint64_t seed = 0);

std::string table_markdown(const ComparisonTable& table);
std::string table_csv(const ComparisonTable& table);

}  // namespace fixlab
