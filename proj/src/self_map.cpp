#include "fixlab/self_map.hpp"

#include <cfloat>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fixlab/errors.hpp"

namespace fixlab {

SelfMap SelfMap::finite_table(std::vector<std::size_t> table) {
  if (table.empty()) throw InvalidParameter("table must be nonempty");
  for (std::size_t img : table)
    if (img >= table.size())
      throw InvalidParameter("table entry " + std::to_string(img) +
                             " out of range");
  SelfMap m;
  m.kind_ = Kind::FiniteTable;
  m.table_ = std::move(table);
  return m;
}

SelfMap SelfMap::finite_table_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path);
  std::vector<std::size_t> table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      long long v = std::stoll(line);
      if (v < 0) throw LoadError("negative index in " + path);
      table.push_back(static_cast<std::size_t>(v));
    } catch (const LoadError&) {
      throw;
    } catch (const std::exception&) {
      throw LoadError("non-integer row in " + path + ": " + line);
    }
  }
  try {
    return finite_table(std::move(table));
  } catch (const InvalidParameter& e) {
    throw LoadError(std::string("invalid map in ") + path + ": " + e.what());
  }
}

SelfMap SelfMap::square_half() {
  SelfMap m;
  m.kind_ = Kind::SquareHalf;
  return m;
}

SelfMap SelfMap::successor(std::optional<std::uint64_t> saturation) {
  SelfMap m;
  m.kind_ = Kind::Successor;
  m.saturation_ = saturation;
  return m;
}

SelfMap SelfMap::custom(std::function<Point(const Point&)> fn) {
  SelfMap m;
  m.kind_ = Kind::Custom;
  m.fn_ = std::move(fn);
  return m;
}

Point SelfMap::apply(const Point& x) const {
  switch (kind_) {
    case Kind::FiniteTable:
      if (x.kind != PointKind::FiniteIndex)
        throw DomainMismatch("table map expects finite-index points");
      if (x.index >= table_.size())
        throw OutOfRange("point index outside table domain");
      return Point::finite(table_[x.index]);
    case Kind::SquareHalf:
      if (x.kind != PointKind::RealScalar)
        throw DomainMismatch("square-half map expects real points");
      return Point::real(x.value * x.value / 2.0);
    case Kind::Successor: {
      if (x.kind != PointKind::ExtendedNat)
        throw DomainMismatch("successor map expects extended-natural points");
      if (x.infinite) return Point::infinity();
      std::uint64_t next = x.nat + 1;
      if (saturation_ && next > *saturation_) next = *saturation_;
      return Point::nat_point(next);
    }
    case Kind::Custom:
      return fn_(x);
  }
  throw DomainMismatch("unknown map kind");
}

namespace {

// T^k x = x^(2^k) / 2^(2^k - 1); flushes below DBL_MIN to exact zero.
double square_half_iterate(double x, std::uint64_t k, OrbitFlags* flags) {
  if (k == 0) return x;
  if (x == 0.0) return 0.0;
  int exp = k > 2000 ? 2000 : static_cast<int>(k);
  double e = std::ldexp(1.0, exp);  // 2^k, +inf past the exponent range
  double r = std::pow(x, e) * std::pow(2.0, 1.0 - e);
  if (r < DBL_MIN) {
    if (flags) flags->underflow = true;
    return 0.0;
  }
  return r;
}

}  // namespace

Point SelfMap::iterate(const Point& x, std::uint64_t k,
                       OrbitFlags* flags) const {
  if (k == 0) {
    // Still validate the point's variant.
    if (kind_ != Kind::Custom) (void)apply(x);
    return x;
  }
  switch (kind_) {
    case Kind::SquareHalf:
      if (x.kind != PointKind::RealScalar)
        throw DomainMismatch("square-half map expects real points");
      return Point::real(square_half_iterate(x.value, k, flags));
    case Kind::Successor: {
      if (x.kind != PointKind::ExtendedNat)
        throw DomainMismatch("successor map expects extended-natural points");
      if (x.infinite) return Point::infinity();
      std::uint64_t next = x.nat + k;
      if (next < x.nat) next = UINT64_MAX;  // wrap guard
      if (saturation_ && next > *saturation_) {
        if (flags) flags->saturated = true;
        next = *saturation_;
      }
      return Point::nat_point(next);
    }
    case Kind::FiniteTable:
    case Kind::Custom: {
      Point p = x;
      for (std::uint64_t i = 0; i < k; ++i) p = apply(p);
      return p;
    }
  }
  throw DomainMismatch("unknown map kind");
}

OrbitPairTable orbit_pair_distances(const MetricSpace& space,
                                    const SelfMap& map, const Point& x,
                                    const Point& y, std::uint64_t horizon) {
  if (horizon < 1) throw InvalidParameter("horizon must be >= 1");
  space.require_point(x);
  space.require_point(y);
  OrbitPairTable table;
  table.x = x;
  table.y = y;
  table.horizon = horizon;
  table.D.resize(static_cast<std::size_t>(horizon) + 1);
  if (map.has_closed_iterate()) {
    for (std::uint64_t k = 0; k <= horizon; ++k) {
      Point a = map.iterate(x, k, &table.flags);
      Point b = map.iterate(y, k, &table.flags);
      table.D[static_cast<std::size_t>(k)] = space.distance(a, b);
    }
  } else {
    Point a = x, b = y;
    table.D[0] = space.distance(a, b);
    for (std::uint64_t k = 1; k <= horizon; ++k) {
      a = map.apply(a);
      b = map.apply(b);
      table.D[static_cast<std::size_t>(k)] = space.distance(a, b);
    }
  }
  return table;
}

}  // namespace fixlab
