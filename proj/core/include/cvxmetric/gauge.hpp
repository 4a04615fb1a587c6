#pragma once

#include "cvxmetric/body.hpp"
#include "cvxmetric/geometry.hpp"
#include "cvxmetric/piecewise_affine.hpp"

namespace cvxmetric {

inline constexpr double kSubdiffTol = 1e-9;

/* Minkowski gauge of the body with respect to an interior center. */
struct GaugeFn {
  ConvexBody body;
  Vector center;
};

GaugeFn make_gauge_fn(const ConvexBody& body, const Vector& x0);

/* g(x) = 1 / tau(center, x); 0 on the infinite branch. Values in [0, 1) on
 * strictly interior points. */
double gauge_value(const GaugeFn& fn, const Vector& x);

/* Membership of zeta in the maximal subdifferential at x0 of any convex
 * f : body -> [m, M], i.e. in (M - m) times the gauge subdifferential at its
 * center: support of (body - x0) at zeta / (M - m) at most 1 + tol.
 * m == M degenerates to the singleton {0}. support_out, when given, receives
 * the tested support value (ignored on the degenerate branch). */
bool max_subdiff_contains(const ConvexBody& body, const Vector& x0, const Vector& zeta,
                          double m, double M, double tol = kSubdiffTol,
                          ExtReal* support_out = nullptr);

/* Exact halfspace description { zeta : <zeta, v_i - x0> <= M - m } of the
 * maximal subdifferential for a V-polytope body. */
ConvexBody max_subdiff_hrep(const VPolytope& vp, const Vector& x0, double m, double M);

/* Subgradient of f at an interior, non-floor-clamped point: the scaled
 * gradient of the active affine piece, ties broken by lowest index.
 * ClampedPointError when f(x0) <= m + tol. */
Vector subgradient_of_max_affine(const PiecewiseAffineConvexFn& f, const Vector& x0);

}  // namespace cvxmetric
