#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fixlab/metric_space.hpp"

namespace fixlab {

struct OrbitFlags {
  bool underflow = false;   // iterate flushed to exact 0.0
  bool saturated = false;   // successor clamped at its truncation bound
};

/// A self-map on one of the built-in spaces.  SquareHalf and Successor carry
/// closed-form k-th iterates.
class SelfMap {
 public:
  enum class Kind { FiniteTable, SquareHalf, Successor, Custom };

  static SelfMap finite_table(std::vector<std::size_t> table);
  /// Single-column CSV, row i = image index of point i.
  static SelfMap finite_table_from_csv(const std::string& path);
  /// x -> x^2/2 on [0,1].
  static SelfMap square_half();
  /// n -> n+1, infinity fixed; optionally saturating at a truncation bound.
  static SelfMap successor(std::optional<std::uint64_t> saturation = {});
  static SelfMap custom(std::function<Point(const Point&)> fn);

  Kind kind() const { return kind_; }
  bool has_closed_iterate() const {
    return kind_ == Kind::SquareHalf || kind_ == Kind::Successor;
  }
  const std::vector<std::size_t>& table() const { return table_; }
  std::optional<std::uint64_t> saturation() const { return saturation_; }

  Point apply(const Point& x) const;

  /// T^k x.  SquareHalf uses the closed form x^(2^k) / 2^(2^k - 1), flushing
  /// subnormal results to exact zero; Successor adds k with optional
  /// saturation.  Flags record underflow/saturation when a sink is given.
  Point iterate(const Point& x, std::uint64_t k,
                OrbitFlags* flags = nullptr) const;

 private:
  SelfMap() = default;

  Kind kind_ = Kind::FiniteTable;
  std::vector<std::size_t> table_;
  std::optional<std::uint64_t> saturation_;
  std::function<Point(const Point&)> fn_;
};

/// Distances D[k] = d(T^k x, T^k y) for k = 0..H, with flags accumulated
/// from the iterates.
struct OrbitPairTable {
  Point x, y;
  std::uint64_t horizon = 0;
  std::vector<double> D;   // size horizon + 1
  OrbitFlags flags;
};

OrbitPairTable orbit_pair_distances(const MetricSpace& space,
                                    const SelfMap& map, const Point& x,
                                    const Point& y, std::uint64_t horizon);

}  // namespace fixlab
