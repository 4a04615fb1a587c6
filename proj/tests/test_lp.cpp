#include "doctest.h"

#include "cvxmetric/errors.hpp"
#include "cvxmetric/lp.hpp"

using namespace cvxmetric;

TEST_CASE("box constraint attains the upper bound") {
  LpResult r = lp_maximize({1.0}, Matrix::from_rows({{1.0}, {-1.0}}), {1.0, 0.0});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value.value() == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(r.argmax.has_value());
  CHECK((*r.argmax)[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("missing upper constraint is unbounded") {
  LpResult r = lp_maximize({1.0}, Matrix::from_rows({{-1.0}}), {0.0});
  CHECK(r.status == LpStatus::Unbounded);
  CHECK(r.value.is_inf());
  CHECK(!r.argmax.has_value());
}

TEST_CASE("square maximum of x plus y sits at the corner") {
  Matrix a = Matrix::from_rows({{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}});
  Vector b{1.0, 1.0, 1.0, 1.0};
  LpResult r = lp_maximize({1.0, 1.0}, a, b);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value.value() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK((*r.argmax)[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((*r.argmax)[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("contradictory rows are infeasible") {
  LpResult r = lp_maximize({1.0}, Matrix::from_rows({{1.0}, {-1.0}}), {-1.0, 0.0});
  CHECK(r.status == LpStatus::Infeasible);
}

TEST_CASE("negative optimum needs the free-variable split") {
  // max -x with x >= -3: optimum 3 at x = -3, unreachable for x >= 0.
  LpResult r = lp_maximize({-1.0}, Matrix::from_rows({{-1.0}, {1.0}}), {3.0, -1.0});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value.value() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK((*r.argmax)[0] == doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("nonnegative-variable entry point") {
  LpResult r = lp_maximize_nonneg({1.0, 2.0}, Matrix::from_rows({{1.0, 1.0}}), {1.0});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value.value() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK((*r.argmax)[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK((*r.argmax)[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("negative right-hand side routes through phase one") {
  // x >= 0.5 encoded as -x <= -0.5, so phase one must find a feasible start.
  LpResult r = lp_maximize_nonneg({1.0}, Matrix::from_rows({{-1.0}, {1.0}}), {-0.5, 2.0});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value.value() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("duplicate rows stay optimal under degeneracy") {
  LpResult r = lp_maximize({1.0}, Matrix::from_rows({{1.0}, {1.0}, {-1.0}}), {1.0, 1.0, 0.0});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value.value() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("optimizer satisfies every constraint") {
  Matrix a = Matrix::from_rows({{2.0, 1.0}, {-1.0, 2.0}, {0.0, -1.0}, {-1.0, -1.0}});
  Vector b{4.0, 3.0, 0.0, 1.0};
  LpResult r = lp_maximize({3.0, 1.0}, a, b);
  REQUIRE(r.status == LpStatus::Optimal);
  const Vector& x = *r.argmax;
  for (std::size_t i = 0; i < a.rows; ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) lhs += a.at(i, j) * x[j];
    CHECK(lhs <= b[i] + 1e-9);
  }
}
