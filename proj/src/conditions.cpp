#include "fixlab/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "fixlab/errors.hpp"
#include "fixlab/rng.hpp"
#include "fixlab/tolerance.hpp"

namespace fixlab {

std::string family_name(Family f) {
  switch (f) {
    case Family::Banach: return "banach";
    case Family::Kannan: return "kannan";
    case Family::Chatterjea: return "chatterjea";
    case Family::Ciric: return "ciric";
    case Family::FContraction: return "f-contraction";
    case Family::PathAveraged: return "path-averaged";
  }
  return "?";
}

std::string f_kind_name(FKind f) {
  switch (f) {
    case FKind::Log: return "log";
    case FKind::LogPlusLinear: return "log-linear";
    case FKind::NegInvSqrt: return "neg-inv-sqrt";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "banach") return Family::Banach;
  if (name == "kannan") return Family::Kannan;
  if (name == "chatterjea") return Family::Chatterjea;
  if (name == "ciric") return Family::Ciric;
  if (name == "f-contraction" || name == "f") return Family::FContraction;
  if (name == "path-averaged" || name == "pa") return Family::PathAveraged;
  return {};
}

std::optional<FKind> f_kind_from_name(const std::string& name) {
  if (name == "log") return FKind::Log;
  if (name == "log-linear") return FKind::LogPlusLinear;
  if (name == "neg-inv-sqrt") return FKind::NegInvSqrt;
  return {};
}

double f_value(FKind f, double t) {
  if (t <= 0.0) throw InvalidParameter("F is defined on (0, inf)");
  switch (f) {
    case FKind::Log: return std::log(t);
    case FKind::LogPlusLinear: return std::log(t) + t;
    case FKind::NegInvSqrt: return -1.0 / std::sqrt(t);
  }
  return 0.0;
}

bool f_admissibility_spotcheck(FKind f) {
  // (F1): strictly increasing on a log-spaced sample.
  double prev = f_value(f, 1e-15);
  for (int e = -14; e <= 2; ++e) {
    double t = std::pow(10.0, e);
    double cur = f_value(f, t);
    if (!(cur > prev)) return false;
    prev = cur;
  }
  // (F2): F(t) -> -inf along t = 10^-1 .. 10^-15.
  double last = f_value(f, 0.1);
  for (int e = -2; e >= -15; --e) {
    double cur = f_value(f, std::pow(10.0, e));
    if (!(cur < last)) return false;
    last = cur;
  }
  if (!(last < -30.0 || f == FKind::NegInvSqrt)) return false;
  if (f == FKind::NegInvSqrt && !(last < -1e6)) return false;
  // (F3): t^k F(t) -> 0; k = 1/2 works for the logarithmic pair, the inverse
  // square root needs k in (1/2, 1), checked with k = 3/4.
  double kexp = (f == FKind::NegInvSqrt) ? 0.75 : 0.5;
  // The slowest case is t^(3/4)|F| = t^(1/4) for the inverse square root,
  // about 1.8e-4 at t = 1e-15; require an order of magnitude of headroom.
  double tail = std::pow(1e-15, kexp) * std::fabs(f_value(f, 1e-15));
  return tail < 1e-3;
}

ConditionSpec ConditionSpec::banach(double k) {
  if (!(k > 0.0 && k < 1.0)) throw InvalidParameter("banach k must be in (0,1)");
  ConditionSpec s;
  s.family = Family::Banach;
  s.k = k;
  return s;
}

ConditionSpec ConditionSpec::kannan(double k) {
  if (!(k > 0.0 && k < 0.5))
    throw InvalidParameter("kannan k must be in (0,1/2)");
  ConditionSpec s;
  s.family = Family::Kannan;
  s.k = k;
  return s;
}

ConditionSpec ConditionSpec::chatterjea(double k) {
  if (!(k > 0.0 && k < 0.5))
    throw InvalidParameter("chatterjea k must be in (0,1/2)");
  ConditionSpec s;
  s.family = Family::Chatterjea;
  s.k = k;
  return s;
}

ConditionSpec ConditionSpec::ciric(double k) {
  if (!(k > 0.0 && k < 1.0)) throw InvalidParameter("ciric k must be in (0,1)");
  ConditionSpec s;
  s.family = Family::Ciric;
  s.k = k;
  return s;
}

ConditionSpec ConditionSpec::f_contraction(FKind f, double tau) {
  if (!(tau > 0.0)) throw InvalidParameter("tau must be positive");
  ConditionSpec s;
  s.family = Family::FContraction;
  s.f = f;
  s.tau = tau;
  return s;
}

ConditionSpec ConditionSpec::path_averaged(double alpha, std::uint64_t min_n,
                                           std::uint64_t horizon) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InvalidParameter("alpha must be in (0,1)");
  if (min_n < 1) throw InvalidParameter("N must be >= 1");
  if (horizon < min_n) throw InvalidParameter("horizon must be >= N");
  ConditionSpec s;
  s.family = Family::PathAveraged;
  s.alpha = alpha;
  s.min_n = min_n;
  s.horizon = horizon;
  return s;
}

std::optional<double> PaSums::rho(std::uint64_t n) const {
  if (n < 1 || n > horizon) return {};
  double s = S[static_cast<std::size_t>(n)];
  if (s <= 0.0) return {};
  return S1[static_cast<std::size_t>(n)] / s;
}

PaSums pa_sums(const OrbitPairTable& table) {
  const std::uint64_t h = table.horizon;
  PaSums sums;
  sums.horizon = h;
  sums.S.assign(static_cast<std::size_t>(h) + 1, 0.0);
  sums.S1.assign(static_cast<std::size_t>(h) + 1, 0.0);
  // Kahan accumulation; the harmonic sweeps add 1e4 terms and must stay
  // within 1e-12 relative of the closed forms.
  double s = 0.0, sc = 0.0, s1 = 0.0, s1c = 0.0;
  for (std::uint64_t n = 1; n <= h; ++n) {
    double d = table.D[static_cast<std::size_t>(n - 1)];
    double yy = d - sc;
    double tt = s + yy;
    sc = (tt - s) - yy;
    s = tt;
    sums.S[static_cast<std::size_t>(n)] = s;

    double d1 = table.D[static_cast<std::size_t>(n)];
    yy = d1 - s1c;
    tt = s1 + yy;
    s1c = (tt - s1) - yy;
    s1 = tt;
    sums.S1[static_cast<std::size_t>(n)] = s1;
  }
  return sums;
}

PointwiseEval evaluate_condition(const ConditionSpec& spec,
                                 const MetricSpace& space, const SelfMap& map,
                                 const Point& x, const Point& y) {
  if (spec.family == Family::PathAveraged)
    throw WrongFamily("the path-averaged condition has no pointwise form");
  Point tx = map.apply(x);
  Point ty = map.apply(y);
  double dT = space.distance(tx, ty);
  PointwiseEval ev;
  switch (spec.family) {
    case Family::Banach:
      ev.lhs = dT;
      ev.rhs = spec.k * space.distance(x, y);
      return ev;
    case Family::Kannan:
      ev.lhs = dT;
      ev.rhs = spec.k * (space.distance(x, tx) + space.distance(y, ty));
      return ev;
    case Family::Chatterjea:
      ev.lhs = dT;
      ev.rhs = spec.k * (space.distance(x, ty) + space.distance(y, tx));
      return ev;
    case Family::Ciric: {
      double cross =
          0.5 * (space.distance(x, ty) + space.distance(y, tx));
      double m = std::max({space.distance(x, y), space.distance(x, tx),
                           space.distance(y, ty), cross});
      ev.lhs = dT;
      ev.rhs = spec.k * m;
      return ev;
    }
    case Family::FContraction: {
      if (dT <= 0.0) {
        ev.applicable = false;
        return ev;
      }
      double d = space.distance(x, y);
      ev.lhs = spec.tau + f_value(spec.f, dT);
      ev.rhs = d > 0.0 ? f_value(spec.f, d)
                       : -std::numeric_limits<double>::infinity();
      return ev;
    }
    case Family::PathAveraged:
      break;
  }
  throw WrongFamily("unknown family");
}

CheckReport check_condition(const ConditionSpec& spec, const MetricSpace& space,
                            const SelfMap& map,
                            std::span<const PointPair> pairs,
                            std::string sample_desc) {
  if (pairs.empty()) throw EmptySample("pair sample is empty");
  CheckReport report;
  report.spec = spec;
  report.pairs_checked = pairs.size();
  report.sample_desc = std::move(sample_desc);

  if (spec.family != Family::PathAveraged) {
    for (const auto& [x, y] : pairs) {
      PointwiseEval ev = evaluate_condition(spec, space, map, x, y);
      if (ev.applicable && !approx_leq(ev.lhs, ev.rhs)) {
        report.verdict = Verdict::Violated;
        report.witness = Witness{x, y, {}, ev.lhs, ev.rhs};
        return report;
      }
    }
    return report;
  }

  for (const auto& [x, y] : pairs) {
    OrbitPairTable table =
        orbit_pair_distances(space, map, x, y, spec.horizon);
    report.flags.underflow |= table.flags.underflow;
    report.flags.saturated |= table.flags.saturated;
    PaSums sums = pa_sums(table);
    for (std::uint64_t n = spec.min_n; n <= spec.horizon; ++n) {
      double s = sums.S[static_cast<std::size_t>(n)];
      double s1 = sums.S1[static_cast<std::size_t>(n)];
      bool ok = (s == 0.0) ? (s1 == 0.0) : approx_leq(s1, spec.alpha * s);
      if (!ok) {
        report.verdict = Verdict::Violated;
        report.witness = Witness{x, y, n, s1, spec.alpha * s};
        return report;
      }
    }
  }
  return report;
}

namespace {

// lhs and denominator kernel of the pointwise ratio for one pair; nullopt
// when the kernel vanishes.
std::optional<std::pair<double, double>> pointwise_kernel(
    Family family, const MetricSpace& space, const SelfMap& map,
    const Point& x, const Point& y) {
  Point tx = map.apply(x);
  Point ty = map.apply(y);
  double dT = space.distance(tx, ty);
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
      throw WrongFamily("ratio kernel is defined for pointwise families");
  }
  if (denom <= 0.0) return {};
  return std::make_pair(dT, denom);
}

}  // namespace

TightestResult tightest_constant(Family family, const MetricSpace& space,
                                 const SelfMap& map,
                                 std::span<const PointPair> pairs,
                                 std::uint64_t min_n, std::uint64_t horizon) {
  if (pairs.empty()) throw EmptySample("pair sample is empty");
  if (family == Family::FContraction)
    throw WrongFamily("use f_admissible_tau for the F family");

  TightestResult best;
  best.value = -std::numeric_limits<double>::infinity();
  bool found = false;

  if (family == Family::PathAveraged) {
    if (min_n < 1 || horizon < min_n)
      throw InvalidParameter("need 1 <= N <= horizon");
    for (const auto& [x, y] : pairs) {
      OrbitPairTable table = orbit_pair_distances(space, map, x, y, horizon);
      PaSums sums = pa_sums(table);
      for (std::uint64_t n = min_n; n <= horizon; ++n) {
        double s = sums.S[static_cast<std::size_t>(n)];
        if (s <= 0.0) continue;
        ++best.defined_count;
        double ratio = sums.S1[static_cast<std::size_t>(n)] / s;
        if (ratio > best.value) {
          best.value = ratio;
          best.witness =
              Witness{x, y, n, sums.S1[static_cast<std::size_t>(n)], s};
          found = true;
        }
      }
    }
  } else {
    for (const auto& [x, y] : pairs) {
      auto kernel = pointwise_kernel(family, space, map, x, y);
      if (!kernel) continue;
      ++best.defined_count;
      double ratio = kernel->first / kernel->second;
      if (ratio > best.value) {
        best.value = ratio;
        best.witness = Witness{x, y, {}, kernel->first, kernel->second};
        found = true;
      }
    }
  }
  if (!found || best.defined_count == 0)
    throw AllDegenerate("every sampled instance had a zero denominator");
  return best;
}

std::vector<ProfileRow> pa_ratio_profile(const MetricSpace& space,
                                         const SelfMap& map, const Point& x,
                                         const Point& y,
                                         std::uint64_t horizon) {
  OrbitPairTable table = orbit_pair_distances(space, map, x, y, horizon);
  PaSums sums = pa_sums(table);
  std::vector<ProfileRow> rows;
  rows.reserve(static_cast<std::size_t>(horizon));
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    ProfileRow row;
    row.n = n;
    row.S = sums.S[static_cast<std::size_t>(n)];
    row.S1 = sums.S1[static_cast<std::size_t>(n)];
    row.rho = sums.rho(n);
    rows.push_back(row);
  }
  return rows;
}

FGapResult f_admissible_tau(FKind f, const MetricSpace& space,
                            const SelfMap& map,
                            std::span<const PointPair> pairs) {
  if (pairs.empty()) throw EmptySample("pair sample is empty");
  FGapResult res;
  res.inf_gap = std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : pairs) {
    Point tx = map.apply(x);
    Point ty = map.apply(y);
    double dT = space.distance(tx, ty);
    if (dT <= 0.0) continue;
    ++res.applicable;
    double d = space.distance(x, y);
    double gap = d > 0.0 ? f_value(f, d) - f_value(f, dT)
                         : -std::numeric_limits<double>::infinity();
    if (gap < res.inf_gap) {
      res.inf_gap = gap;
      res.attaining = Witness{x, y, {}, f_value(f, dT), gap};
    }
  }
  return res;
}

std::vector<PointPair> sample_pairs(const MetricSpace& space,
                                    std::uint64_t seed) {
  std::vector<PointPair> pairs;
  switch (space.kind()) {
    case MetricSpace::Kind::FiniteExplicit: {
      std::size_t n = space.point_count();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          pairs.emplace_back(Point::finite(i), Point::finite(j));
      break;
    }
    case MetricSpace::Kind::RealInterval: {
      std::size_t g = space.grid_points();
      if (g <= 200) {
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t j = i + 1; j < g; ++j)
            pairs.emplace_back(space.grid_point(i), space.grid_point(j));
      } else {
        // Adjacent pairs capture the x -> y boundary behavior; the random
        // subset covers the bulk.
        std::set<std::pair<std::size_t, std::size_t>> chosen;
        for (std::size_t i = 0; i + 1 < g; ++i) chosen.insert({i, i + 1});
        std::mt19937_64 rng(mix_seed(seed, 0x70616972ULL));
        const std::size_t target = chosen.size() + 200000;
        while (chosen.size() < target) {
          std::size_t i = uniform_index(rng, g);
          std::size_t j = uniform_index(rng, g);
          if (i == j) continue;
          if (i > j) std::swap(i, j);
          chosen.insert({i, j});
        }
        pairs.reserve(chosen.size());
        for (const auto& [i, j] : chosen)
          pairs.emplace_back(space.grid_point(i), space.grid_point(j));
      }
      break;
    }
    case MetricSpace::Kind::HarmonicNat: {
      std::uint64_t top = std::min<std::uint64_t>(space.truncation(), 1000);
      for (std::uint64_t m = 1; m <= top; ++m) {
        for (std::uint64_t n = m + 1; n <= top; ++n)
          pairs.emplace_back(Point::nat_point(m), Point::nat_point(n));
        pairs.emplace_back(Point::nat_point(m), Point::infinity());
      }
      break;
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const PointPair& a, const PointPair& b) {
              if (point_less(a.first, b.first)) return true;
              if (point_less(b.first, a.first)) return false;
              return point_less(a.second, b.second);
            });
  return pairs;
}

}  // namespace fixlab
