#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fixlab/metric_space.hpp"
#include "fixlab/self_map.hpp"

namespace fixlab {

enum class Family { Banach, Kannan, Chatterjea, Ciric, FContraction, PathAveraged };

/// Built-in Wardowski control functions; all satisfy (F1)-(F3).
enum class FKind { Log, LogPlusLinear, NegInvSqrt };

std::string family_name(Family f);
std::string f_kind_name(FKind f);
std::optional<Family> family_from_name(const std::string& name);
std::optional<FKind> f_kind_from_name(const std::string& name);

/// F(t) for t > 0.
double f_value(FKind f, double t);

/// Numeric spot-check of (F1)-(F3) for a built-in control function.
bool f_admissibility_spotcheck(FKind f);

struct ConditionSpec {
  Family family = Family::Banach;
  double k = 0.0;               // Banach/Kannan/Chatterjea/Ciric
  FKind f = FKind::Log;         // FContraction
  double tau = 0.0;             // FContraction
  double alpha = 0.0;           // PathAveraged
  std::uint64_t min_n = 1;      // PathAveraged: first horizon index N
  std::uint64_t horizon = 1;    // PathAveraged: H >= N

  static ConditionSpec banach(double k);          // k in (0,1)
  static ConditionSpec kannan(double k);          // k in (0,1/2)
  static ConditionSpec chatterjea(double k);      // k in (0,1/2)
  static ConditionSpec ciric(double k);           // k in (0,1)
  static ConditionSpec f_contraction(FKind f, double tau);  // tau > 0
  static ConditionSpec path_averaged(double alpha, std::uint64_t min_n,
                                     std::uint64_t horizon);
};

using PointPair = std::pair<Point, Point>;

/// Partial orbit-distance sums of one pair: S[n] = D[0]+...+D[n-1] and the
/// one-step-shifted S1[n] = D[1]+...+D[n], for n = 1..H (index 0 unused).
struct PaSums {
  std::uint64_t horizon = 0;
  std::vector<double> S, S1;
  std::optional<double> rho(std::uint64_t n) const;  // S1[n]/S[n]
};

PaSums pa_sums(const OrbitPairTable& table);

struct PointwiseEval {
  double lhs = 0.0;
  double rhs = 0.0;
  bool applicable = true;  // false for F-contraction instances with d(Tx,Ty)=0
};

/// Both sides of a pointwise condition at one pair.  Throws WrongFamily for
/// the path-averaged family, which has no pointwise form.
PointwiseEval evaluate_condition(const ConditionSpec& spec,
                                 const MetricSpace& space, const SelfMap& map,
                                 const Point& x, const Point& y);

enum class Verdict { HoldsOnSample, Violated };

struct Witness {
  Point x, y;
  std::optional<std::uint64_t> n;  // horizon index, path-averaged only
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CheckReport {
  ConditionSpec spec;
  Verdict verdict = Verdict::HoldsOnSample;
  std::optional<Witness> witness;   // lexicographically first violation
  std::size_t pairs_checked = 0;
  std::string sample_desc;
  OrbitFlags flags;
};

CheckReport check_condition(const ConditionSpec& spec, const MetricSpace& space,
                            const SelfMap& map,
                            std::span<const PointPair> pairs,
                            std::string sample_desc = "");

struct TightestResult {
  double value = 0.0;
  Witness witness;                // attains the supremum (first such instance)
  std::size_t defined_count = 0;  // instances with a positive denominator
};

/// Supremum of lhs/kernel ratios over the sample; the least admissible
/// constant for the family.  N and H apply to the path-averaged family only.
TightestResult tightest_constant(Family family, const MetricSpace& space,
                                 const SelfMap& map,
                                 std::span<const PointPair> pairs,
                                 std::uint64_t min_n = 1,
                                 std::uint64_t horizon = 1);

struct ProfileRow {
  std::uint64_t n = 0;
  double S = 0.0;
  double S1 = 0.0;
  std::optional<double> rho;
};

std::vector<ProfileRow> pa_ratio_profile(const MetricSpace& space,
                                         const SelfMap& map, const Point& x,
                                         const Point& y, std::uint64_t horizon);

struct FGapResult {
  double inf_gap = 0.0;          // inf over pairs of F(d(x,y)) - F(d(Tx,Ty))
  std::size_t applicable = 0;    // pairs with d(Tx,Ty) > 0
  std::optional<Witness> attaining;
};

/// The largest admissible tau for a built-in F over the sample (the condition
/// holds with some tau > 0 iff inf_gap > 0).  Vacuous samples report +inf.
FGapResult f_admissible_tau(FKind f, const MetricSpace& space,
                            const SelfMap& map,
                            std::span<const PointPair> pairs);

/// Default pair-sampling protocol: all unordered pairs for finite spaces;
/// all grid pairs for intervals up to 200 grid points, otherwise all
/// adjacent-grid pairs plus a seeded random subset; all pairs over indices
/// <= min(M, 1000) plus infinity for the harmonic space.
std::vector<PointPair> sample_pairs(const MetricSpace& space,
                                    std::uint64_t seed);

}  // namespace fixlab
