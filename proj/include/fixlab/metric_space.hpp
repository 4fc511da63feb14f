#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fixlab {

enum class PointKind { FiniteIndex, RealScalar, ExtendedNat };

/// A point in one of the three built-in space families.  ExtendedNat covers
/// the positive integers together with a dedicated infinity sentinel.
struct Point {
  PointKind kind = PointKind::FiniteIndex;
  std::size_t index = 0;     // FiniteIndex
  double value = 0.0;        // RealScalar
  std::uint64_t nat = 0;     // ExtendedNat, >= 1 when finite
  bool infinite = false;     // ExtendedNat only

  static Point finite(std::size_t i);
  static Point real(double v);
  static Point nat_point(std::uint64_t n);
  static Point infinity();

  friend bool operator==(const Point& a, const Point& b);
};

/// Strict ordering within a single space (used for witness tie-breaking).
bool point_less(const Point& a, const Point& b);

std::string to_string(const Point& p);

struct AxiomReport {
  bool pass = true;
  std::string failed_axiom;           // empty when pass
  std::array<Point, 3> witness{};     // meaningful entries depend on the axiom
  bool exhaustive = false;
  std::size_t triples_checked = 0;
};

class MetricSpace {
 public:
  enum class Kind { FiniteExplicit, RealInterval, HarmonicNat };

  /// Explicit symmetric distance matrix (row-major).  Asymmetry beyond the
  /// shared tolerance is rejected; small asymmetry is exactly symmetrized.
  static MetricSpace finite_explicit(std::size_t point_count,
                                     std::vector<double> matrix);
  /// n points with the 0/1 discrete metric.
  static MetricSpace discrete(std::size_t point_count);
  static MetricSpace real_interval(double lo, double hi,
                                   std::size_t grid_points = 1001);
  /// Positive integers up to `truncation` plus infinity, d(m,n) = |1/m - 1/n|.
  static MetricSpace harmonic(std::uint64_t truncation = 10000);

  /// Row-major, header-free CSV; must be square and symmetric.
  static MetricSpace finite_from_csv(const std::string& path);

  Kind kind() const { return kind_; }
  std::size_t point_count() const { return point_count_; }
  double lower() const { return lo_; }
  double upper() const { return hi_; }
  std::size_t grid_points() const { return grid_; }
  std::uint64_t truncation() const { return truncation_; }
  const std::vector<double>& matrix() const { return matrix_; }

  double distance(const Point& x, const Point& y) const;

  /// All points for finite spaces; the uniform grid (truncated to limit) for
  /// intervals; 1..min(M, limit-1) followed by infinity for the harmonic space.
  std::vector<Point> enumerate_points(std::size_t limit) const;

  /// Grid point i of a RealInterval (endpoints exact).
  Point grid_point(std::size_t i) const;

  /// Throws DomainMismatch / OutOfRange if p does not belong to this space.
  void require_point(const Point& p) const;

 private:
  MetricSpace() = default;

  Kind kind_ = Kind::FiniteExplicit;
  std::size_t point_count_ = 0;        // FiniteExplicit
  std::vector<double> matrix_;         // FiniteExplicit
  double lo_ = 0.0, hi_ = 1.0;         // RealInterval
  std::size_t grid_ = 1001;            // RealInterval
  std::uint64_t truncation_ = 10000;   // HarmonicNat
};

/// Checks symmetry, nonnegativity, d(x,x)=0 and the triangle inequality.
/// Exhaustive when the space has at most 64 points, otherwise a seeded sample
/// of triples.  Violations are reported, never thrown.
AxiomReport verify_metric_axioms(const MetricSpace& space,
                                 std::size_t triple_sample_size,
                                 std::uint64_t seed);

}  // namespace fixlab
