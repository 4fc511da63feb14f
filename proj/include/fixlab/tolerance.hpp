#pragma once

#include <algorithm>
#include <cmath>

namespace fixlab {

// Absolute tolerance, scaled by magnitude once values exceed 1.
inline constexpr double kEps = 1e-12;

inline double scaled_eps(double a, double b) {
  return kEps * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

/// a <= b, up to the shared floating tolerance.
inline bool approx_leq(double a, double b) { return a <= b + scaled_eps(a, b); }

inline bool approx_eq(double a, double b) {
  return std::fabs(a - b) <= scaled_eps(a, b);
}

inline double rel_err(double computed, double expected) {
  if (expected == 0.0) return std::fabs(computed);
  return std::fabs(computed - expected) / std::fabs(expected);
}

}  // namespace fixlab
