#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixlab/errors.hpp"
#include "fixlab/picard.hpp"
#include "fixlab/tolerance.hpp"

using namespace fixlab;

TEST_CASE("orbit of the 3-point example from x0 = 0") {
  MetricSpace space = MetricSpace::discrete(3);
  SelfMap map = SelfMap::finite_table({1, 2, 2});
  PicardTrace t = run_picard(space, map, Point::finite(0));
  CHECK(t.status == PicardStatus::Converged);
  REQUIRE(t.iterates.size() == 4);
  CHECK(t.iterates[0] == Point::finite(0));
  CHECK(t.iterates[1] == Point::finite(1));
  CHECK(t.iterates[2] == Point::finite(2));
  CHECK(t.iterates[3] == Point::finite(2));
  REQUIRE(t.a.size() == 3);
  CHECK(t.a[0] == 1.0);
  CHECK(t.a[1] == 1.0);
  CHECK(t.a[2] == 0.0);
  REQUIRE(t.limit.has_value());
  CHECK(*t.limit == Point::finite(2));
  CHECK(t.residual == 0.0);
  CHECK(t.partial_sum(1) == 1.0);
  CHECK(t.partial_sum(3) == 2.0);
}

TEST_CASE("starting at a fixed point converges immediately") {
  MetricSpace space = MetricSpace::discrete(3);
  SelfMap map = SelfMap::finite_table({1, 2, 2});
  PicardTrace t = run_picard(space, map, Point::finite(2));
  CHECK(t.status == PicardStatus::Converged);
  CHECK(t.a.size() == 1);
  CHECK(t.a[0] == 0.0);
  CHECK(*t.limit == Point::finite(2));
}

TEST_CASE("x^2/2 orbit sums match the telescoping closed form") {
  MetricSpace space = MetricSpace::real_interval(0.0, 1.0, 1001);
  SelfMap map = SelfMap::square_half();
  PicardTrace t = run_picard(space, map, Point::real(1.0));
  CHECK(t.status == PicardStatus::Converged);
  REQUIRE(t.limit.has_value());
  CHECK(t.limit->value <= 1e-12);
  CHECK(t.residual <= 1e-12);
  // The orbit is monotone decreasing, so S_n = x_0 - x_n = 1 - 2^(1 - 2^n).
  for (std::uint64_t n = 1; n <= 5; ++n) {
    double expected = 1.0 - std::pow(2.0, 1.0 - std::pow(2.0, double(n)));
    CHECK(t.partial_sum(n) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("partial sums are exactly consistent with the steps") {
  MetricSpace space = MetricSpace::harmonic(10000);
  SelfMap map = SelfMap::successor(10000);
  PicardTrace t = run_picard(space, map, Point::nat_point(1), 1e-12, 50);
  CHECK(t.status == PicardStatus::MaxIterReached);
  REQUIRE(t.S.size() == t.a.size());
  CHECK(t.S[0] == t.a[0]);
  for (std::size_t i = 1; i < t.S.size(); ++i)
    CHECK(std::fabs((t.S[i] - t.S[i - 1]) - t.a[i]) <= scaled_eps(t.S[i], 0.0));
  double total = 0.0;
  for (double a : t.a) total += a;
  CHECK(std::fabs(total - t.S.back()) <= scaled_eps(t.S.back(), 0.0));
}

TEST_CASE("a two-cycle is detected on a finite space") {
  MetricSpace space = MetricSpace::discrete(2);
  SelfMap swap = SelfMap::finite_table({1, 0});
  PicardTrace t = run_picard(space, swap, Point::finite(0));
  CHECK(t.status == PicardStatus::Cycled);
  CHECK_FALSE(t.limit.has_value());
}

TEST_CASE("summability bound on the 3-point example trace") {
  MetricSpace space = MetricSpace::discrete(3);
  SelfMap map = SelfMap::finite_table({1, 2, 2});
  PicardTrace t = run_picard(space, map, Point::finite(0));

  BoundReport good = check_summability_bound(t, 0.5, 2);
  CHECK(good.a0 == 1.0);
  CHECK(good.bound_constant == 2.0);  // max{S_1 = 1, a_0/(1 - 1/2) = 2}
  CHECK(good.all_pass);
  CHECK(good.final_sum_bounded);
  REQUIRE(good.rows.size() >= 1);
  CHECK(good.rows.front().n == 2);
  CHECK(good.rows.front().telescoping_ok);
  CHECK(good.rows.front().bounded_ok);

  // alpha = 0.4 does not hold for this map; the telescoping check reports it.
  BoundReport bad = check_summability_bound(t, 0.4, 2);
  CHECK(bad.bound_constant == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK_FALSE(bad.all_pass);

  CHECK_THROWS_AS(check_summability_bound(t, 0.5, 10), InsufficientTrace);
}

TEST_CASE("summability bound holds along the x^2/2 orbit") {
  MetricSpace space = MetricSpace::real_interval(0.0, 1.0, 1001);
  SelfMap map = SelfMap::square_half();
  PicardTrace t = run_picard(space, map, Point::real(1.0));
  BoundReport r = check_summability_bound(t, 0.7, 5);
  CHECK(r.bound_constant == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  CHECK(r.all_pass);
  CHECK(r.final_sum_bounded);
  CHECK(t.partial_sum(t.S.size()) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("fixed-point scans") {
  MetricSpace discrete = MetricSpace::discrete(3);
  auto fp = find_fixed_points(discrete, SelfMap::finite_table({1, 2, 2}), 10);
  REQUIRE(fp.size() == 1);
  CHECK(fp[0] == Point::finite(2));

  auto all = find_fixed_points(discrete, SelfMap::finite_table({0, 1, 2}), 10);
  CHECK(all.size() == 3);

  MetricSpace harmonic = MetricSpace::harmonic(100);
  auto inf = find_fixed_points(harmonic, SelfMap::successor(), 200);
  REQUIRE(inf.size() == 1);
  CHECK(inf[0] == Point::infinity());
}
