#include "doctest.h"

#include <cmath>

#include "cvxmetric/errors.hpp"
#include "cvxmetric/extremal.hpp"
#include "cvxmetric/oracles.hpp"
#include "cvxmetric/rng.hpp"
#include "cvxmetric/sampling.hpp"

using namespace cvxmetric;

namespace {

ConvexBody unit_interval() {
  return ConvexBody::hpolytope(Matrix::from_rows({{1.0}, {-1.0}}), {1.0, 0.0});
}

}  // namespace

TEST_CASE("directional reach fixtures") {
  ConvexBody interval = unit_interval();
  CHECK(sigma(interval, {0.25}, {0.75}).value() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sigma(interval, {0.5}, {0.75}).value() ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(sigma(interval, {0.5}, {0.0}).is_inf());
  CHECK_THROWS_AS(sigma(interval, {1.0}, {0.5}), NotInteriorError);
}

TEST_CASE("construction stores the reach-scaled direction") {
  ExtremalFn fn = build_extremal(unit_interval(), {0.25}, {0.5}, 0.0, 1.0,
                                 Orientation::Upper);
  REQUIRE(fn.direction().size() == 1);
  CHECK(fn.direction()[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(!fn.constant());
  CHECK(fn.anchor_tau().value() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("recession pairs and degenerate ranges give constants") {
  ConvexBody halfline = ConvexBody::hpolytope(Matrix::from_rows({{-1.0}}), {0.0});
  ExtremalFn flat = build_extremal(halfline, {1.0}, {2.0}, 0.0, 1.0, Orientation::Upper);
  CHECK(flat.constant());
  CHECK(eval_extremal(flat, {5.0}) == 0.0);
  CHECK(eval_extremal(flat, {0.25}) == 0.0);

  ExtremalFn two = build_extremal(unit_interval(), {0.25}, {0.5}, 2.0, 2.0,
                                  Orientation::Upper);
  CHECK(two.constant());
  CHECK(eval_extremal(two, {0.7}) == 2.0);

  CHECK_THROWS_AS(build_extremal(unit_interval(), {0.25}, {0.5}, 1.0, 0.0,
                                 Orientation::Upper),
                  Error);
}

TEST_CASE("evaluation fixtures on the interval") {
  ExtremalFn fn = build_extremal(unit_interval(), {0.25}, {0.5}, 0.0, 1.0,
                                 Orientation::Upper);
  CHECK(eval_extremal(fn, {0.25}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eval_extremal(fn, {0.5}) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(eval_extremal(fn, {0.1}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(eval_extremal(fn, {1.5}), NotInteriorError);
}

TEST_CASE("lower orientation mirrors the swapped pair") {
  ExtremalFn lower = build_extremal(unit_interval(), {0.25}, {0.5}, 0.0, 1.0,
                                    Orientation::Lower);
  const double at_x = eval_extremal(lower, {0.25});
  const double at_y = eval_extremal(lower, {0.5});
  CHECK(at_y - at_x == doctest::Approx(-0.5).epsilon(1e-12));

  ExtremalFn upper_swapped = build_extremal(unit_interval(), {0.5}, {0.25}, 0.0, 1.0,
                                            Orientation::Upper);
  CHECK(eval_extremal(upper_swapped, {0.25}) == doctest::Approx(at_x).epsilon(1e-12));
  CHECK(eval_extremal(upper_swapped, {0.5}) == doctest::Approx(at_y).epsilon(1e-12));
}

TEST_CASE("attainment fixtures") {
  AttainmentResult a = attainment_check(unit_interval(), {0.25}, {0.5}, 0.0, 1.0);
  CHECK(a.upper_attained);
  CHECK(a.lower_attained);

  a = attainment_check(unit_interval(), {0.3}, {0.3}, 0.0, 1.0);
  CHECK(a.upper_attained);
  CHECK(a.lower_attained);
  CHECK(a.upper_gap <= 1e-12);
  CHECK(a.lower_gap <= 1e-12);

  ConvexBody disk = ConvexBody::ball({0.0, 0.0}, 1.0);
  ExtremalFn fn = build_extremal(disk, {0.0, 0.0}, {0.5, 0.0}, -3.0, 5.0,
                                 Orientation::Upper);
  CHECK(eval_extremal(fn, {0.5, 0.0}) - eval_extremal(fn, {0.0, 0.0}) ==
        doctest::Approx(4.0).epsilon(1e-9));
  a = attainment_check(disk, {0.0, 0.0}, {0.5, 0.0}, -3.0, 5.0);
  CHECK(a.upper_attained);
  CHECK(a.lower_attained);
}

TEST_CASE("range, convexity, and reach concavity on random instances") {
  Rng rng(404);
  std::size_t range_checks = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t dim = 1 + i % 5;
    ConvexBody body = random_body(dim, BodyKind(i % 3), rng.next_u64());
    std::vector<Vector> pts = sample_interior(body, rng.next_u64(), 2);
    const double m = rng.uniform(-2.0, 2.0);
    const double M = m + rng.uniform(0.0, 3.0);
    ExtremalFn fn = build_extremal(body, pts[0], pts[1], m, M,
                                   i % 2 ? Orientation::Lower : Orientation::Upper);

    std::vector<Vector> zs = sample_interior(body, rng.next_u64(), 40);
    for (const Vector& z : zs) {
      const double v = eval_extremal(fn, z);
      CHECK(v >= m);
      CHECK(v <= M);
      ++range_checks;
    }
    for (std::size_t k = 0; k + 1 < zs.size(); k += 2) {
      Vector mid = lerp(zs[k], zs[k + 1], 0.5);
      CHECK(eval_extremal(fn, mid) <=
            0.5 * eval_extremal(fn, zs[k]) + 0.5 * eval_extremal(fn, zs[k + 1]) + 1e-9);
    }
    const Vector& u = fn.direction();
    if (!fn.constant()) {
      for (std::size_t k = 0; k + 1 < zs.size(); k += 2) {
        ExtReal s1 = sigma(body, zs[k], u);
        ExtReal s2 = sigma(body, zs[k + 1], u);
        ExtReal s3 = sigma(body, lerp(zs[k], zs[k + 1], 0.5), u);
        if (s1.is_finite() && s2.is_finite() && s3.is_finite())
          CHECK(s3.value() >= 0.5 * s1.value() + 0.5 * s2.value() - 1e-9);
      }
    }
  }
  CHECK(range_checks >= 2000);
}

TEST_CASE("attainment holds across representations") {
  Rng rng(505);
  for (int i = 0; i < 120; ++i) {
    const std::size_t dim = 1 + i % 6;
    ConvexBody body = random_body(dim, BodyKind(i % 3), rng.next_u64());
    std::vector<Vector> pts = sample_interior(body, rng.next_u64(), 2);
    const double m = rng.uniform(-2.0, 2.0);
    const double M = m + rng.uniform(0.0, 3.0);
    AttainmentResult a = attainment_check(body, pts[0], pts[1], m, M);
    CHECK(a.upper_attained);
    CHECK(a.lower_attained);
  }
}
