#include "fixlab/picard.hpp"

#include <algorithm>
#include <unordered_set>

#include "fixlab/errors.hpp"
#include "fixlab/tolerance.hpp"

namespace fixlab {

double PicardTrace::partial_sum(std::uint64_t n) const {
  if (n < 1 || n > S.size()) throw OutOfRange("partial sum index out of range");
  return S[static_cast<std::size_t>(n - 1)];
}

PicardTrace run_picard(const MetricSpace& space, const SelfMap& map,
                       const Point& x0, double tol, std::uint64_t max_iter) {
  if (!(tol > 0.0)) throw InvalidParameter("tol must be positive");
  if (max_iter < 1) throw InvalidParameter("max_iter must be >= 1");
  space.require_point(x0);

  PicardTrace trace;
  trace.x0 = x0;
  trace.iterates.push_back(x0);

  const bool finite = space.kind() == MetricSpace::Kind::FiniteExplicit;
  std::unordered_set<std::size_t> visited;
  if (finite) visited.insert(x0.index);

  Point current = x0;
  int small_steps = 0;
  double running = 0.0;
  for (std::uint64_t k = 0; k < max_iter; ++k) {
    Point next = map.apply(current);
    double step = space.distance(current, next);
    trace.iterates.push_back(next);
    trace.a.push_back(step);
    running += step;
    trace.S.push_back(running);

    if (step == 0.0) {
      // Exact fixed point; no further iterates to record.
      trace.status = PicardStatus::Converged;
      trace.limit = next;
      trace.residual = space.distance(next, map.apply(next));
      return trace;
    }
    if (finite) {
      if (visited.count(next.index)) {
        trace.status = PicardStatus::Cycled;
        trace.limit = {};
        return trace;
      }
      visited.insert(next.index);
    }
    small_steps = step <= tol ? small_steps + 1 : 0;
    if (small_steps >= 3) {
      trace.status = PicardStatus::Converged;
      trace.limit = next;
      trace.residual = space.distance(next, map.apply(next));
      return trace;
    }
    current = next;
  }
  trace.status = PicardStatus::MaxIterReached;
  trace.limit = trace.iterates.back();
  trace.residual =
      space.distance(*trace.limit, map.apply(*trace.limit));
  return trace;
}

BoundReport check_summability_bound(const PicardTrace& trace, double alpha,
                                    std::uint64_t min_n) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InvalidParameter("alpha must be in (0,1)");
  if (min_n < 1) throw InvalidParameter("N must be >= 1");
  const std::uint64_t recorded = trace.S.size();
  if (recorded < min_n)
    throw InsufficientTrace("trace records fewer than N partial sums");

  BoundReport report;
  report.a0 = trace.a.empty() ? 0.0 : trace.a[0];
  double c = report.a0 / (1.0 - alpha);
  for (std::uint64_t n = 1; n < min_n; ++n)
    c = std::max(c, trace.partial_sum(n));
  report.bound_constant = c;

  for (std::uint64_t n = min_n; n < recorded; ++n) {
    BoundReport::Row row;
    row.n = n;
    row.S_n = trace.partial_sum(n);
    row.a_n = trace.a[static_cast<std::size_t>(n)];
    row.telescoping_ok =
        approx_leq((1.0 - alpha) * row.S_n, report.a0 - row.a_n);
    row.bounded_ok = approx_leq(row.S_n, c);
    report.all_pass &= row.telescoping_ok && row.bounded_ok;
    report.rows.push_back(row);
  }
  report.final_sum_bounded = approx_leq(trace.partial_sum(recorded), c);
  report.all_pass &= report.final_sum_bounded;
  return report;
}

std::vector<Point> find_fixed_points(const MetricSpace& space,
                                     const SelfMap& map, std::size_t limit,
                                     double tol) {
  std::vector<Point> fixed;
  for (const Point& p : space.enumerate_points(limit)) {
    if (space.distance(p, map.apply(p)) <= tol) fixed.push_back(p);
  }
  return fixed;
}

}  // namespace fixlab
