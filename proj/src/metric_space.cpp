#include "fixlab/metric_space.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "fixlab/errors.hpp"
#include "fixlab/rng.hpp"
#include "fixlab/tolerance.hpp"

namespace fixlab {

Point Point::finite(std::size_t i) {
  Point p;
  p.kind = PointKind::FiniteIndex;
  p.index = i;
  return p;
}

Point Point::real(double v) {
  Point p;
  p.kind = PointKind::RealScalar;
  p.value = v;
  return p;
}

Point Point::nat_point(std::uint64_t n) {
  if (n < 1) throw InvalidParameter("ExtendedNat values must be >= 1");
  Point p;
  p.kind = PointKind::ExtendedNat;
  p.nat = n;
  return p;
}

Point Point::infinity() {
  Point p;
  p.kind = PointKind::ExtendedNat;
  p.infinite = true;
  return p;
}

bool operator==(const Point& a, const Point& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case PointKind::FiniteIndex:
      return a.index == b.index;
    case PointKind::RealScalar:
      return a.value == b.value;
    case PointKind::ExtendedNat:
      if (a.infinite != b.infinite) return false;
      return a.infinite || a.nat == b.nat;
  }
  return false;
}

bool point_less(const Point& a, const Point& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  switch (a.kind) {
    case PointKind::FiniteIndex:
      return a.index < b.index;
    case PointKind::RealScalar:
      return a.value < b.value;
    case PointKind::ExtendedNat:
      if (a.infinite != b.infinite) return !a.infinite;  // finite < infinity
      return !a.infinite && a.nat < b.nat;
  }
  return false;
}

std::string to_string(const Point& p) {
  switch (p.kind) {
    case PointKind::FiniteIndex:
      return std::to_string(p.index);
    case PointKind::RealScalar: {
      std::ostringstream os;
      os.precision(17);
      os << p.value;
      return os.str();
    }
    case PointKind::ExtendedNat:
      return p.infinite ? "inf" : std::to_string(p.nat);
  }
  return "?";
}

MetricSpace MetricSpace::finite_explicit(std::size_t point_count,
                                         std::vector<double> matrix) {
  if (point_count < 1) throw InvalidParameter("point_count must be >= 1");
  if (matrix.size() != point_count * point_count)
    throw InvalidParameter("distance matrix must be point_count x point_count");
  for (std::size_t i = 0; i < point_count; ++i) {
    if (matrix[i * point_count + i] != 0.0)
      throw InvalidParameter("distance matrix diagonal must be zero");
    for (std::size_t j = 0; j < i; ++j) {
      double a = matrix[i * point_count + j];
      double b = matrix[j * point_count + i];
      if (a < 0.0 || b < 0.0)
        throw InvalidParameter("distances must be nonnegative");
      if (!approx_eq(a, b))
        throw InvalidParameter("distance matrix must be symmetric");
      matrix[i * point_count + j] = b;  // exact symmetry
    }
  }
  MetricSpace s;
  s.kind_ = Kind::FiniteExplicit;
  s.point_count_ = point_count;
  s.matrix_ = std::move(matrix);
  return s;
}

MetricSpace MetricSpace::discrete(std::size_t point_count) {
  std::vector<double> m(point_count * point_count, 1.0);
  for (std::size_t i = 0; i < point_count; ++i) m[i * point_count + i] = 0.0;
  return finite_explicit(point_count, std::move(m));
}

MetricSpace MetricSpace::real_interval(double lo, double hi,
                                       std::size_t grid_points) {
  if (!(lo < hi)) throw InvalidParameter("interval bounds must satisfy lo < hi");
  if (grid_points < 2) throw InvalidParameter("grid needs at least 2 points");
  MetricSpace s;
  s.kind_ = Kind::RealInterval;
  s.lo_ = lo;
  s.hi_ = hi;
  s.grid_ = grid_points;
  return s;
}

MetricSpace MetricSpace::harmonic(std::uint64_t truncation) {
  if (truncation < 1) throw InvalidParameter("truncation must be >= 1");
  MetricSpace s;
  s.kind_ = Kind::HarmonicNat;
  s.truncation_ = truncation;
  return s;
}

MetricSpace MetricSpace::finite_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw LoadError("non-numeric cell in " + path + ": " + cell);
      }
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0) throw LoadError("empty matrix in " + path);
  std::vector<double> m;
  m.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw LoadError("matrix in " + path + " is not square");
    m.insert(m.end(), row.begin(), row.end());
  }
  try {
    return finite_explicit(n, std::move(m));
  } catch (const InvalidParameter& e) {
    throw LoadError(std::string("invalid matrix in ") + path + ": " + e.what());
  }
}

namespace {

double inv_or_zero(const Point& p) {
  return p.infinite ? 0.0 : 1.0 / static_cast<double>(p.nat);
}

}  // namespace

void MetricSpace::require_point(const Point& p) const {
  switch (kind_) {
    case Kind::FiniteExplicit:
      if (p.kind != PointKind::FiniteIndex)
        throw DomainMismatch("expected a finite index point");
      if (p.index >= point_count_)
        throw OutOfRange("index " + std::to_string(p.index) +
                         " >= point count " + std::to_string(point_count_));
      return;
    case Kind::RealInterval: {
      if (p.kind != PointKind::RealScalar)
        throw DomainMismatch("expected a real scalar point");
      double slack = kEps * std::max(1.0, hi_ - lo_);
      if (p.value < lo_ - slack || p.value > hi_ + slack)
        throw OutOfRange("value " + std::to_string(p.value) +
                         " outside interval bounds");
      return;
    }
    case Kind::HarmonicNat:
      if (p.kind != PointKind::ExtendedNat)
        throw DomainMismatch("expected an extended-natural point");
      if (!p.infinite && p.nat < 1)
        throw OutOfRange("extended naturals start at 1");
      return;
  }
}

double MetricSpace::distance(const Point& x, const Point& y) const {
  require_point(x);
  require_point(y);
  switch (kind_) {
    case Kind::FiniteExplicit:
      return matrix_[x.index * point_count_ + y.index];
    case Kind::RealInterval:
      return std::fabs(x.value - y.value);
    case Kind::HarmonicNat:
      return std::fabs(inv_or_zero(x) - inv_or_zero(y));
  }
  return 0.0;
}

Point MetricSpace::grid_point(std::size_t i) const {
  if (kind_ != Kind::RealInterval)
    throw DomainMismatch("grid_point is only defined on intervals");
  if (i >= grid_) throw OutOfRange("grid index out of range");
  if (i == 0) return Point::real(lo_);
  if (i == grid_ - 1) return Point::real(hi_);
  double t = static_cast<double>(i) / static_cast<double>(grid_ - 1);
  return Point::real(lo_ + (hi_ - lo_) * t);
}

std::vector<Point> MetricSpace::enumerate_points(std::size_t limit) const {
  if (limit < 1) throw InvalidParameter("limit must be >= 1");
  std::vector<Point> pts;
  switch (kind_) {
    case Kind::FiniteExplicit:
      pts.reserve(point_count_);
      for (std::size_t i = 0; i < point_count_; ++i)
        pts.push_back(Point::finite(i));
      break;
    case Kind::RealInterval: {
      std::size_t n = std::min(limit, grid_);
      pts.reserve(n);
      for (std::size_t i = 0; i < n; ++i) pts.push_back(grid_point(i));
      break;
    }
    case Kind::HarmonicNat: {
      std::uint64_t top =
          std::min<std::uint64_t>(truncation_, limit > 0 ? limit - 1 : 0);
      pts.reserve(static_cast<std::size_t>(top) + 1);
      for (std::uint64_t n = 1; n <= top; ++n)
        pts.push_back(Point::nat_point(n));
      pts.push_back(Point::infinity());
      break;
    }
  }
  return pts;
}

namespace {

constexpr std::size_t kExhaustiveLimit = 64;
constexpr std::size_t kSampleEnumerationCap = 4096;

bool check_triple(const MetricSpace& space, const Point& a, const Point& b,
                  const Point& c, AxiomReport& report) {
  double dab = space.distance(a, b);
  double dba = space.distance(b, a);
  if (dab != dba) {
    report = {false, "symmetry", {a, b, b}, report.exhaustive,
              report.triples_checked};
    return false;
  }
  if (dab < 0.0) {
    report = {false, "nonnegativity", {a, b, b}, report.exhaustive,
              report.triples_checked};
    return false;
  }
  if (space.distance(a, a) != 0.0) {
    report = {false, "identity", {a, a, a}, report.exhaustive,
              report.triples_checked};
    return false;
  }
  double dac = space.distance(a, c);
  double dbc = space.distance(b, c);
  if (!approx_leq(dac, dab + dbc)) {
    report = {false, "triangle", {a, b, c}, report.exhaustive,
              report.triples_checked};
    return false;
  }
  return true;
}

}  // namespace

AxiomReport verify_metric_axioms(const MetricSpace& space,
                                 std::size_t triple_sample_size,
                                 std::uint64_t seed) {
  AxiomReport report;
  std::vector<Point> pts = space.enumerate_points(kSampleEnumerationCap);
  const std::size_t n = pts.size();
  if (n <= kExhaustiveLimit &&
      (space.kind() != MetricSpace::Kind::RealInterval ||
       space.grid_points() <= kExhaustiveLimit)) {
    report.exhaustive = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          ++report.triples_checked;
          if (!check_triple(space, pts[i], pts[j], pts[k], report))
            return report;
        }
    return report;
  }
  std::mt19937_64 rng(mix_seed(seed, 0x6d65747269636bULL));
  for (std::size_t t = 0; t < triple_sample_size; ++t) {
    const Point& a = pts[uniform_index(rng, n)];
    const Point& b = pts[uniform_index(rng, n)];
    const Point& c = pts[uniform_index(rng, n)];
    ++report.triples_checked;
    if (!check_triple(space, a, b, c, report)) return report;
  }
  return report;
}

}  // namespace fixlab
