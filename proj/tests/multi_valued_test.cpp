#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "tripoint/fixtures.hpp"
#include "tripoint/multi_valued.hpp"

#include "support.hpp"

using namespace tripoint;

TEST_CASE("MultiMap validates images and lifts point maps") {
  CHECK_THROWS_AS(MultiMap({}), std::invalid_argument);
  CHECK_THROWS_AS(MultiMap({IndexSubset::singleton(0),
                            IndexSubset::singleton(2)}),
                  std::invalid_argument);

  auto lifted = MultiMap::lift(SingleMap({1, 0, 2}));
  CHECK(lifted.size() == 3);
  CHECK(lifted(0) == IndexSubset::singleton(1));
  CHECK(lifted(2) == IndexSubset::singleton(2));
}

TEST_CASE("class names and slope limits") {
  CHECK(multi_class_name(MultiClass::hhd) == "hhd");
  CHECK(multi_class_name(MultiClass::hdd) == "hdd");
  CHECK(multi_class_name(MultiClass::ddd) == "ddd");
  CHECK(multi_class_name(MultiClass::hhh) == "hhh");
  CHECK(multi_class_lambda_limit(MultiClass::hhd) == 1.0);
  CHECK(multi_class_lambda_limit(MultiClass::hhh) == 0.5);
}

TEST_CASE("multi_triple_lhs on the three-point fixture") {
  auto d = fixtures::example35_table();
  auto f = fixtures::example35_map();

  // F(v1) = F(v2) = {v1}, F(v3) = {v1, v3}: the two Hausdorff terms give
  // 0 + 1 and the diameter term gives 1.
  CHECK(multi_triple_lhs(f, d, 0, 1, 2, MultiClass::hhd) == 2.0);
  CHECK(multi_triple_lhs(f, d, 0, 1, 2, MultiClass::hdd) == 2.0);
  CHECK(multi_triple_lhs(f, d, 0, 1, 2, MultiClass::ddd) == 2.0);
  CHECK(multi_triple_lhs(f, d, 0, 1, 2, MultiClass::hhh) == 2.0);

  CHECK_THROWS_AS(multi_triple_lhs(f, d, 0, 0, 2, MultiClass::hhd),
                  std::domain_error);
}

TEST_CASE("verify_three_point_multi checks the slope range per class") {
  auto d = fixtures::example35_table();
  auto f = fixtures::example35_map();

  CHECK_THROWS_AS(verify_three_point_multi(f, d, 0.0, MultiClass::hhd),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_three_point_multi(f, d, 1.0, MultiClass::hhd),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_three_point_multi(f, d, 0.6, MultiClass::hhh),
                  std::invalid_argument);
  CHECK_NOTHROW(verify_three_point_multi(f, d, 0.49, MultiClass::hhh));
}

TEST_CASE("the fixture passes hhd at two thirds and fails below") {
  auto d = fixtures::example35_table();
  auto f = fixtures::example35_map();

  auto r = verify_three_point_multi(f, d, 2.0 / 3.0, MultiClass::hhd);
  CHECK(r.holds);
  CHECK(r.checked == 6);
  REQUIRE(r.max_ratio.has_value());
  CHECK(*r.max_ratio == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  auto below = verify_three_point_multi(f, d, 0.6, MultiClass::hhd);
  CHECK_FALSE(below.holds);

  // Every admissible hhh slope sits under the 2/3 ratio, so that class
  // never certifies this map.
  auto narrow = verify_three_point_multi(f, d, 0.49, MultiClass::hhh);
  CHECK_FALSE(narrow.holds);
  CHECK(*narrow.max_ratio == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("class_inclusion_check reports a consistent ladder") {
  auto d = fixtures::example35_table();
  auto f = fixtures::example35_map();

  auto ladder = class_inclusion_check(f, d, 2.0 / 3.0);
  CHECK(ladder.ddd.holds);
  CHECK(ladder.hdd.holds);
  CHECK(ladder.hhd.holds);
  CHECK(ladder.chain_consistent);

  // All-of-space images: Hausdorff terms vanish, diameter terms stay 1.
  MultiMap wide({IndexSubset({0, 1}), IndexSubset({0, 1}),
                 IndexSubset({0, 1})});
  auto mixed = class_inclusion_check(wide, discrete_table(3), 0.5);
  CHECK_FALSE(mixed.ddd.holds);
  CHECK_FALSE(mixed.hdd.holds);
  CHECK(mixed.hhd.holds);
  CHECK(mixed.chain_consistent);
}

TEST_CASE("slotwise lhs ordering holds on random maps") {
  std::mt19937 rng(616);
  for (int inst = 0; inst < 20; ++inst) {
    auto d = testsupport::random_metric_table(rng, 5);
    auto f = testsupport::random_multi_map(rng, 5);
    for (std::size_t x = 0; x < 5; ++x) {
      for (std::size_t y = 0; y < 5; ++y) {
        for (std::size_t z = 0; z < 5; ++z) {
          if (x == y || y == z || z == x) continue;
          const double weak = multi_triple_lhs(f, d, x, y, z, MultiClass::hhd);
          const double mid = multi_triple_lhs(f, d, x, y, z, MultiClass::hdd);
          const double strong =
              multi_triple_lhs(f, d, x, y, z, MultiClass::ddd);
          CHECK(weak <= mid);
          CHECK(mid <= strong);
        }
      }
    }
  }
}

TEST_CASE("check_no_mutual_membership finds the first bouncing pair") {
  CHECK(check_no_mutual_membership(fixtures::example35_map()).ok);

  MultiMap f({IndexSubset::singleton(1), IndexSubset::singleton(0),
              IndexSubset::singleton(2)});
  auto r = check_no_mutual_membership(f);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness.has_value());
  CHECK((*r.witness)[0] == 0);
  CHECK((*r.witness)[1] == 1);
}

TEST_CASE("verify_nadler separates from the three-point condition") {
  auto d = fixtures::example35_table();
  auto f = fixtures::example35_map();

  auto r = verify_nadler(f, d, 2.0 / 3.0);
  CHECK_FALSE(r.holds);
  REQUIRE(r.max_ratio.has_value());
  CHECK(*r.max_ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.worst == std::vector<std::size_t>{0, 2});
  // H(F(v1),F(v3)) = 1 = d(v1,v3) and likewise from v2, so two pairs break.
  CHECK(r.violations.size() == 2);

  MultiMap constant({IndexSubset::singleton(0), IndexSubset::singleton(0),
                     IndexSubset::singleton(0)});
  CHECK(verify_nadler(constant, d, 0.5).holds);
}

TEST_CASE("lifting a point map preserves the pairwise verdict") {
  std::mt19937 rng(617);
  for (int inst = 0; inst < 20; ++inst) {
    auto d = testsupport::random_metric_table(rng, 5);
    auto f = testsupport::random_single_map(rng, 5);
    for (double lam : {0.3, 0.7}) {
      auto plain = verify_banach(f, d, lam);
      auto lifted = verify_nadler(MultiMap::lift(f), d, lam);
      CHECK(plain.holds == lifted.holds);
      REQUIRE(plain.max_ratio.has_value());
      REQUIRE(lifted.max_ratio.has_value());
      CHECK(*plain.max_ratio == doctest::Approx(*lifted.max_ratio));
    }
  }
}

TEST_CASE("multi_orbit walks to the nearest fixed point") {
  auto d = fixtures::example35_table();
  auto f = fixtures::example35_map();

  auto orbit = multi_orbit(f, d, 1, 2.0 / 3.0, MultiClass::hhd);
  CHECK(orbit.points == std::vector<std::size_t>{1, 0});
  CHECK(orbit.stopped == MultiOrbitStop::fixed_point);
  REQUIRE(orbit.fixed_point.has_value());
  CHECK(*orbit.fixed_point == 0);
  REQUIRE(orbit.step_d.size() == 1);
  CHECK(orbit.step_d[0] == 1.0);
  CHECK(orbit.slack == std::vector<double>{0.0});
  REQUIRE(orbit.selection_bound.size() == 1);
  CHECK(std::isinf(orbit.selection_bound[0]));
  CHECK(orbit.perimeter_seq.empty());  // two points never close a triangle
}

TEST_CASE("multi_orbit stops before selecting from a fixed start") {
  auto d = fixtures::example35_table();
  auto f = fixtures::example35_map();
  for (std::size_t start : {std::size_t{0}, std::size_t{2}}) {
    auto orbit = multi_orbit(f, d, start, 2.0 / 3.0, MultiClass::hhd);
    CHECK(orbit.points == std::vector<std::size_t>{start});
    CHECK(orbit.stopped == MultiOrbitStop::fixed_point);
    CHECK(*orbit.fixed_point == start);
    CHECK(orbit.step_d.empty());
  }
}

TEST_CASE("multi_orbit breaks nearest-member ties by lowest index") {
  // From p2 both members of the image sit at distance 1; the walk takes p0.
  MultiMap f({IndexSubset::singleton(0), IndexSubset::singleton(0),
              IndexSubset({0, 1})});
  auto orbit = multi_orbit(f, discrete_table(3), 2, 0.5, MultiClass::hhd);
  REQUIRE(orbit.points.size() >= 2);
  CHECK(orbit.points[1] == 0);
  CHECK(*orbit.fixed_point == 0);
}

TEST_CASE("multi_orbit detects cycles and honors the cap") {
  MultiMap ring({IndexSubset::singleton(1), IndexSubset::singleton(2),
                 IndexSubset::singleton(0)});
  auto d = discrete_table(3);

  auto orbit = multi_orbit(ring, d, 0, 0.5, MultiClass::hhd);
  CHECK(orbit.stopped == MultiOrbitStop::cycle);
  CHECK(orbit.points == std::vector<std::size_t>{0, 1, 2, 0});
  CHECK_FALSE(orbit.fixed_point.has_value());

  auto capped = multi_orbit(ring, d, 0, 0.5, MultiClass::hhd, 2);
  CHECK(capped.stopped == MultiOrbitStop::iteration_cap);
  CHECK(capped.step_d.size() == 2);

  CHECK_THROWS_AS(multi_orbit(ring, d, 3, 0.5, MultiClass::hhd),
                  std::domain_error);
  CHECK_THROWS_AS(multi_orbit(ring, d, 0, 0.5, MultiClass::hhd, 0),
                  std::domain_error);
  CHECK_THROWS_AS(multi_orbit(ring, d, 0, 0.6, MultiClass::hhh),
                  std::invalid_argument);
}

TEST_CASE("multi_orbit step and perimeter bookkeeping is consistent") {
  std::mt19937 rng(618);
  int walked = 0;
  while (walked < 10) {
    auto d = testsupport::random_metric_table(rng, 6);
    auto f = testsupport::random_multi_map(rng, 6, 0.3);
    auto orbit = multi_orbit(f, d, 0, 0.5, MultiClass::hhd, 50);
    if (orbit.points.size() < 3) continue;
    ++walked;

    REQUIRE(orbit.step_d.size() + 1 == orbit.points.size());
    REQUIRE(orbit.perimeter_seq.size() + 2 == orbit.points.size());
    // Nearest-member selection stays within the Hausdorff gap plus slack.
    for (std::size_t n = 1; n < orbit.step_d.size(); ++n) {
      CHECK(orbit.step_d[n] <= orbit.selection_bound[n] + 1e-12);
    }
    for (std::size_t i = 0; i < orbit.perimeter_seq.size(); ++i) {
      const std::size_t a = orbit.points[i];
      const std::size_t b = orbit.points[i + 1];
      const std::size_t c = orbit.points[i + 2];
      CHECK(orbit.perimeter_seq[i] ==
            doctest::Approx(d(a, b) + d(b, c) + d(c, a)));
    }
  }
}

TEST_CASE("fixed_points of a set-valued map") {
  CHECK(fixed_points(fixtures::example35_map()) ==
        std::vector<std::size_t>{0, 2});
  MultiMap ring({IndexSubset::singleton(1), IndexSubset::singleton(2),
                 IndexSubset::singleton(0)});
  CHECK(fixed_points(ring) == std::vector<std::size_t>{});
}
