#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fixlab/metric_space.hpp"
#include "fixlab/self_map.hpp"

namespace fixlab {

enum class PicardStatus { Converged, MaxIterReached, Cycled };

/// Orbit of one starting point with its step distances a_k = d(x_k, x_{k+1})
/// and running partial sums S[i] = a_0 + ... + a_i.
struct PicardTrace {
  Point x0;
  std::vector<Point> iterates;
  std::vector<double> a;
  std::vector<double> S;
  PicardStatus status = PicardStatus::MaxIterReached;
  std::optional<Point> limit;
  double residual = 0.0;

  double partial_sum(std::uint64_t n) const;  // S_n, n >= 1
};

/// Iterates until an exact fixed point is reached, a_k <= tol holds for
/// three consecutive steps, a cycle is detected (finite spaces), or max_iter.
PicardTrace run_picard(const MetricSpace& space, const SelfMap& map,
                       const Point& x0, double tol = 1e-12,
                       std::uint64_t max_iter = 1000000);

struct BoundReport {
  double a0 = 0.0;
  double bound_constant = 0.0;  // max{S_1..S_{N-1}, a0/(1-alpha)}
  struct Row {
    std::uint64_t n = 0;
    double S_n = 0.0;
    double a_n = 0.0;
    bool telescoping_ok = false;  // (1-alpha) S_n <= a_0 - a_n
    bool bounded_ok = false;      // S_n <= C
  };
  std::vector<Row> rows;
  bool final_sum_bounded = true;
  bool all_pass = true;
};

/// Diagnostic for the summability chain (1-alpha) S_n <= a_0 - a_n and
/// S_n <= C; must hold whenever the map satisfies the path-averaged
/// condition with (alpha, N).  Not an assertion of membership.
BoundReport check_summability_bound(const PicardTrace& trace, double alpha,
                                    std::uint64_t min_n);

/// Points of the enumerated domain with d(x, Tx) <= tol, enumeration order.
std::vector<Point> find_fixed_points(const MetricSpace& space,
                                     const SelfMap& map, std::size_t limit,
                                     double tol = 1e-12);

}  // namespace fixlab
