#include "fixlab/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "fixlab/errors.hpp"
#include "fixlab/rng.hpp"
#include "fixlab/tolerance.hpp"

namespace fixlab {

std::vector<double> metric_closure(std::vector<double> m, std::size_t n) {
  if (m.size() != n * n) throw InvalidParameter("matrix size mismatch");
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double via = m[i * n + k] + m[k * n + j];
        if (via < m[i * n + j]) m[i * n + j] = via;
      }
  // Floyd-Warshall preserves symmetry up to rounding; enforce it exactly.
  for (std::size_t i = 0; i < n; ++i) {
    m[i * n + i] = 0.0;
    for (std::size_t j = 0; j < i; ++j) {
      double d = std::min(m[i * n + j], m[j * n + i]);
      m[i * n + j] = d;
      m[j * n + i] = d;
    }
  }
  return m;
}

MetricSpace random_finite_metric(const RandomSpaceSpec& spec) {
  const std::size_t n = spec.point_count;
  if (n < 2 || n > 64)
    throw InvalidParameter("point_count must be in [2, 64]");
  std::mt19937_64 rng(mix_seed(spec.seed, 0x7370616365ULL));
  std::vector<double> m(n * n, 0.0);
  if (spec.method == RandomSpaceSpec::Method::EuclideanEmbed) {
    std::vector<std::pair<double, double>> pts(n);
    for (auto& p : pts) {
      p.first = uniform_unit(rng);
      p.second = uniform_unit(rng);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double d = std::hypot(pts[i].first - pts[j].first,
                              pts[i].second - pts[j].second);
        m[i * n + j] = d;
        m[j * n + i] = d;
      }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double d = 0.05 + 0.95 * uniform_unit(rng);
        m[i * n + j] = d;
        m[j * n + i] = d;
      }
    m = metric_closure(std::move(m), n);
  }
  return MetricSpace::finite_explicit(n, std::move(m));
}

SelfMap random_self_map(std::size_t point_count, std::uint64_t seed) {
  if (point_count < 1) throw InvalidParameter("point_count must be >= 1");
  std::mt19937_64 rng(mix_seed(seed, 0x6d6170ULL));
  std::vector<std::size_t> table(point_count);
  for (auto& img : table) img = uniform_index(rng, point_count);
  return SelfMap::finite_table(std::move(table));
}

bool Classification::is_member(Family f) const {
  switch (f) {
    case Family::Banach: return banach.member;
    case Family::Kannan: return kannan.member;
    case Family::Chatterjea: return chatterjea.member;
    case Family::Ciric: return ciric.member;
    case Family::FContraction: return f_member;
    case Family::PathAveraged: return pa.member;
  }
  return false;
}

namespace {

constexpr double kBoundarySlack = 10.0 * kEps;

FamilyVerdict verdict_against_bound(double constant, double bound) {
  FamilyVerdict v;
  v.constant = constant;
  v.member = constant < bound - kBoundarySlack;
  v.boundary = std::fabs(constant - bound) <= kBoundarySlack;
  return v;
}

// Constant for a pointwise family, treating unsatisfiable instances
// (zero kernel, positive lhs) as +inf.
FamilyVerdict pointwise_verdict(Family family, const MetricSpace& space,
                                const SelfMap& map,
                                std::span<const PointPair> pairs,
                                double bound) {
  double sup = 0.0;
  bool infeasible = false;
  for (const auto& [x, y] : pairs) {
    Point tx = map.apply(x);
    Point ty = map.apply(y);
    double lhs = space.distance(tx, ty);
    double denom = 0.0;
    switch (family) {
      case Family::Banach:
        denom = space.distance(x, y);
        break;
      case Family::Kannan:
        denom = space.distance(x, tx) + space.distance(y, ty);
        break;
      case Family::Chatterjea:
        denom = space.distance(x, ty) + space.distance(y, tx);
        break;
      case Family::Ciric:
        denom = std::max(
            {space.distance(x, y), space.distance(x, tx),
             space.distance(y, ty),
             0.5 * (space.distance(x, ty) + space.distance(y, tx))});
        break;
      default:
        throw WrongFamily("pointwise families only");
    }
    if (denom <= 0.0) {
      if (lhs > kEps) infeasible = true;
      continue;
    }
    sup = std::max(sup, lhs / denom);
  }
  if (infeasible)
    return verdict_against_bound(std::numeric_limits<double>::infinity(),
                                 bound);
  return verdict_against_bound(sup, bound);
}

}  // namespace

Classification classify(const MetricSpace& space, const SelfMap& map,
                        std::uint64_t n_lo, std::uint64_t n_hi) {
  if (space.kind() != MetricSpace::Kind::FiniteExplicit)
    throw DomainMismatch("classification runs on finite spaces");
  if (n_lo < 1 || n_hi < n_lo) throw InvalidParameter("need 1 <= n_lo <= n_hi");
  const std::uint64_t horizon = space.point_count() + 8;

  std::vector<PointPair> pairs = sample_pairs(space, 0);
  Classification cls;
  cls.banach = pointwise_verdict(Family::Banach, space, map, pairs, 1.0);
  cls.kannan = pointwise_verdict(Family::Kannan, space, map, pairs, 0.5);
  cls.chatterjea =
      pointwise_verdict(Family::Chatterjea, space, map, pairs, 0.5);
  cls.ciric = pointwise_verdict(Family::Ciric, space, map, pairs, 1.0);

  // Path-averaged: suffix maxima of the ratio profile give the tightest
  // alpha for every N in one pass per pair.
  const std::size_t n_count = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<double> alpha_for_n(n_count, 0.0);
  for (const auto& [x, y] : pairs) {
    OrbitPairTable table = orbit_pair_distances(space, map, x, y, horizon);
    PaSums sums = pa_sums(table);
    double suffix = 0.0;
    std::vector<double> suffix_max(static_cast<std::size_t>(horizon) + 1, 0.0);
    for (std::uint64_t n = horizon; n >= 1; --n) {
      double s = sums.S[static_cast<std::size_t>(n)];
      if (s > 0.0) {
        suffix = std::max(suffix, sums.S1[static_cast<std::size_t>(n)] / s);
      } else if (sums.S1[static_cast<std::size_t>(n)] > 0.0) {
        suffix = std::numeric_limits<double>::infinity();
      }
      suffix_max[static_cast<std::size_t>(n)] = suffix;
    }
    for (std::size_t i = 0; i < n_count; ++i) {
      std::uint64_t n = n_lo + i;
      if (n <= horizon)
        alpha_for_n[i] = std::max(alpha_for_n[i], suffix_max[n]);
    }
  }
  double best_alpha = std::numeric_limits<double>::infinity();
  std::uint64_t best_n = n_lo;
  for (std::size_t i = 0; i < n_count; ++i) {
    if (alpha_for_n[i] < best_alpha - kEps) {
      best_alpha = alpha_for_n[i];
      best_n = n_lo + i;
    }
  }
  cls.pa = verdict_against_bound(best_alpha, 1.0);
  cls.pa_best_min_n = best_n;

  const FKind fkinds[] = {FKind::Log, FKind::LogPlusLinear, FKind::NegInvSqrt};
  double best_gap = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 3; ++i) {
    FGapResult gap = f_admissible_tau(fkinds[i], space, map, pairs);
    cls.f_gaps[i] = gap.applicable == 0
                        ? std::numeric_limits<double>::infinity()
                        : gap.inf_gap;
    best_gap = std::max(best_gap, cls.f_gaps[i]);
  }
  cls.f_member = best_gap > kEps;
  cls.f_boundary = std::fabs(best_gap) <= kBoundarySlack;
  return cls;
}

std::vector<SeparationWitness> search_separation(const SeparationQuery& query) {
  for (Family f : query.must_hold)
    for (Family g : query.must_fail)
      if (f == g)
        throw InvalidParameter("must_hold and must_fail overlap");
  if (query.trials < 1) throw InvalidParameter("trials must be >= 1");

  std::vector<SeparationWitness> witnesses;
  for (std::uint64_t t = 0; t < query.trials; ++t) {
    std::uint64_t trial_seed = mix_seed(query.seed, t);
    RandomSpaceSpec space_spec{query.point_count, query.method, trial_seed};
    MetricSpace space = random_finite_metric(space_spec);
    SelfMap map =
        random_self_map(query.point_count, mix_seed(trial_seed, 0x746d61ULL));
    Classification cls = classify(space, map, query.n_lo, query.n_hi);
    bool match = true;
    for (Family f : query.must_hold) match &= cls.is_member(f);
    for (Family f : query.must_fail) match &= !cls.is_member(f);
    if (match) {
      witnesses.push_back(SeparationWitness{t, space, map, cls});
      if (witnesses.size() >= query.max_witnesses) break;
    }
  }
  return witnesses;
}

}  // namespace fixlab
