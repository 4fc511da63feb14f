#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fixlab/conditions.hpp"
#include "fixlab/metric_space.hpp"
#include "fixlab/self_map.hpp"

namespace fixlab {

struct RandomSpaceSpec {
  enum class Method { EuclideanEmbed, RepairedMatrix };
  std::size_t point_count = 3;  // in [2, 64]
  Method method = Method::EuclideanEmbed;
  std::uint64_t seed = 0;
};

/// All-pairs shortest-path closure; enforces the triangle inequality on a
/// symmetric nonnegative matrix with zero diagonal.
std::vector<double> metric_closure(std::vector<double> matrix, std::size_t n);

/// Deterministic per (spec, seed); the result passes the metric axioms.
MetricSpace random_finite_metric(const RandomSpaceSpec& spec);

/// Uniform random table map, deterministic per seed.
SelfMap random_self_map(std::size_t point_count, std::uint64_t seed);

struct FamilyVerdict {
  double constant = 0.0;        // tightest measured constant (or +inf)
  bool member = false;          // strictly below the admissible bound
  bool boundary = false;        // within tolerance of the bound
};

struct Classification {
  FamilyVerdict banach, kannan, chatterjea, ciric, pa;
  std::uint64_t pa_best_min_n = 1;            // smallest N attaining pa.constant
  std::array<double, 3> f_gaps{};             // admissible-tau inf per built-in F
  bool f_member = false;
  bool f_boundary = false;

  bool is_member(Family f) const;
};

/// Tightest constants and membership verdicts for every family over all
/// unordered pairs of a finite space.  The path-averaged horizon is
/// point_count + 8 (orbits settle into cycles within point_count steps).
Classification classify(const MetricSpace& space, const SelfMap& map,
                        std::uint64_t n_lo = 1, std::uint64_t n_hi = 4);

struct SeparationQuery {
  std::vector<Family> must_hold;
  std::vector<Family> must_fail;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t point_count = 3;
  RandomSpaceSpec::Method method = RandomSpaceSpec::Method::RepairedMatrix;
  std::uint64_t n_lo = 1, n_hi = 4;
  std::size_t max_witnesses = 16;
};

struct SeparationWitness {
  std::uint64_t trial = 0;
  MetricSpace space;
  SelfMap map;
  Classification classification;
};

/// Seeded random search for instances matching the query.  An empty result
/// means no witness was found in the given trials, nothing stronger.
std::vector<SeparationWitness> search_separation(const SeparationQuery& query);

}  // namespace fixlab
