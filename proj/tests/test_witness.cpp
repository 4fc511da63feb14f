#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "fixlab/errors.hpp"
#include "fixlab/rng.hpp"
#include "fixlab/tolerance.hpp"
#include "fixlab/witness.hpp"

using namespace fixlab;

TEST_CASE("metric closure repairs a triangle violation") {
  std::vector<double> m = {0, 1, 5, 1, 0, 1, 5, 1, 0};
  std::vector<double> closed = metric_closure(std::move(m), 3);
  CHECK(closed[0 * 3 + 2] == 2.0);  // via the middle point
  CHECK(closed[2 * 3 + 0] == 2.0);
  CHECK(closed[0 * 3 + 1] == 1.0);
}

TEST_CASE("metric closure output satisfies the triangle inequality") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + t % 8;
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        m[i * n + j] = m[j * n + i] = 0.01 + uniform_unit(rng);
    std::vector<double> c = metric_closure(std::move(m), n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          CHECK(c[i * n + j] <= c[i * n + k] + c[k * n + j] + 1e-15);
  }
}

TEST_CASE("random spaces are deterministic and pass the axioms") {
  for (auto method : {RandomSpaceSpec::Method::EuclideanEmbed,
                      RandomSpaceSpec::Method::RepairedMatrix}) {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 9999ULL}) {
      RandomSpaceSpec spec{2 + static_cast<std::size_t>(seed % 11), method,
                           seed};
      MetricSpace a = random_finite_metric(spec);
      MetricSpace b = random_finite_metric(spec);
      CHECK(a.matrix() == b.matrix());
      AxiomReport report = verify_metric_axioms(a, 1000, seed);
      CHECK(report.pass);
      CHECK(report.exhaustive);
    }
  }
  CHECK_THROWS_AS(random_finite_metric(RandomSpaceSpec{1}), InvalidParameter);
  CHECK_THROWS_AS(random_finite_metric(RandomSpaceSpec{65}), InvalidParameter);
}

TEST_CASE("random maps are deterministic and in range") {
  for (std::uint64_t seed : {0ULL, 7ULL, 123ULL}) {
    SelfMap a = random_self_map(6, seed);
    SelfMap b = random_self_map(6, seed);
    CHECK(a.table() == b.table());
    for (std::size_t img : a.table()) CHECK(img < 6);
  }
}

TEST_CASE("classification of the 3-point example") {
  MetricSpace space = MetricSpace::discrete(3);
  SelfMap map = SelfMap::finite_table({1, 2, 2});
  Classification cls = classify(space, map, 1, 4);
  CHECK(cls.banach.constant == 1.0);
  CHECK_FALSE(cls.banach.member);
  CHECK(cls.banach.boundary);
  CHECK(cls.pa.constant == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(cls.pa.member);
  CHECK(cls.pa_best_min_n == 2);
  CHECK(cls.is_member(Family::PathAveraged));
  CHECK_FALSE(cls.is_member(Family::Banach));
}

TEST_CASE("classification of constant and identity maps") {
  MetricSpace space = MetricSpace::discrete(4);
  Classification constant = classify(space, SelfMap::finite_table({2, 2, 2, 2}));
  CHECK(constant.banach.constant == 0.0);
  CHECK(constant.banach.member);
  CHECK(constant.pa.member);
  CHECK(constant.f_member);  // every pair lands on the fixed point

  Classification identity =
      classify(space, SelfMap::finite_table({0, 1, 2, 3}));
  CHECK(identity.banach.constant == 1.0);
  CHECK_FALSE(identity.banach.member);
  CHECK_FALSE(identity.pa.member);
  CHECK_FALSE(identity.f_member);
}

TEST_CASE("classify rejects non-finite spaces and bad ranges") {
  CHECK_THROWS_AS(classify(MetricSpace::harmonic(10), SelfMap::successor()),
                  DomainMismatch);
  MetricSpace space = MetricSpace::discrete(2);
  SelfMap map = SelfMap::finite_table({0, 0});
  CHECK_THROWS_AS(classify(space, map, 3, 2), InvalidParameter);
}

TEST_CASE("all 27 self-maps of the discrete 3-point space: direct oracle") {
  MetricSpace space = MetricSpace::discrete(3);
  const std::uint64_t horizon = 3 + 8;
  bool found_separation = false;
  for (std::size_t code = 0; code < 27; ++code) {
    SelfMap map = SelfMap::finite_table(
        {code % 3, (code / 3) % 3, (code / 9) % 3});
    Classification cls = classify(space, map, 1, 4);

    // Direct recomputation, no shared code with classify's suffix pass.
    double banach_sup = 0.0;
    double best_alpha = std::numeric_limits<double>::infinity();
    for (std::uint64_t N = 1; N <= 4; ++N) {
      double alpha = 0.0;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
          Point x = Point::finite(i), y = Point::finite(j);
          if (N == 1)
            banach_sup = std::max(
                banach_sup, space.distance(map.apply(x), map.apply(y)));
          double S = 0.0, S1 = 0.0;
          for (std::uint64_t n = 1; n <= horizon; ++n) {
            S += space.distance(map.iterate(x, n - 1), map.iterate(y, n - 1));
            S1 += space.distance(map.iterate(x, n), map.iterate(y, n));
            if (n < N) continue;
            if (S > 0.0)
              alpha = std::max(alpha, S1 / S);
            else if (S1 > 0.0)
              alpha = std::numeric_limits<double>::infinity();
          }
        }
      best_alpha = std::min(best_alpha, alpha);
    }
    CHECK(cls.banach.constant == banach_sup);
    CHECK(cls.pa.constant == doctest::Approx(best_alpha).epsilon(1e-13));
    CHECK(cls.banach.member == (banach_sup < 1.0 - 10 * kEps));
    CHECK(cls.pa.member == (best_alpha < 1.0 - 10 * kEps));
    if (cls.pa.member && !cls.banach.member) found_separation = true;
  }
  CHECK(found_separation);
}

TEST_CASE("separation search finds averaged-but-not-Banach instances") {
  SeparationQuery query;
  query.must_hold = {Family::PathAveraged};
  query.must_fail = {Family::Banach};
  query.trials = 10000;
  query.seed = 1;
  query.point_count = 3;
  query.max_witnesses = 4;
  auto witnesses = search_separation(query);
  REQUIRE_FALSE(witnesses.empty());
  for (const auto& w : witnesses) {
    Classification again = classify(w.space, w.map, query.n_lo, query.n_hi);
    CHECK(again.is_member(Family::PathAveraged));
    CHECK_FALSE(again.is_member(Family::Banach));
  }
}

TEST_CASE("separation search is deterministic per seed") {
  SeparationQuery query;
  query.must_hold = {Family::PathAveraged};
  query.must_fail = {Family::Banach};
  query.trials = 3000;
  query.seed = 2;
  query.point_count = 4;
  auto a = search_separation(query);
  auto b = search_separation(query);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].trial == b[i].trial);
    CHECK(a[i].space.matrix() == b[i].space.matrix());
    CHECK(a[i].map.table() == b[i].map.table());
  }
}

TEST_CASE("no Banach instance fails the averaged condition") {
  SeparationQuery query;
  query.must_hold = {Family::Banach};
  query.must_fail = {Family::PathAveraged};
  query.trials = 3000;
  query.seed = 3;
  query.point_count = 4;
  CHECK(search_separation(query).empty());
}

TEST_CASE("overlapping hold and fail sets are rejected") {
  SeparationQuery query;
  query.must_hold = {Family::Banach};
  query.must_fail = {Family::Banach};
  CHECK_THROWS_AS(search_separation(query), InvalidParameter);
}
