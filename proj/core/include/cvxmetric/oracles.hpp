#pragma once

#include <cstdint>

#include "cvxmetric/body.hpp"
#include "cvxmetric/geometry.hpp"
#include "cvxmetric/piecewise_affine.hpp"

namespace cvxmetric {

/* Ray-exit factor by membership queries alone: doubling from t = 1 until
 * containment fails (past 1e12 the chord is treated as unbounded), then
 * bisection to relative width tol. Independent of the closed-form path. */
ExtReal tau_bisection_oracle(const ConvexBody& body, const Vector& x, const Vector& y,
                             double tol);

/* Half the log of the chord cross-ratio, from the two boundary points located
 * by bisection along the chord; UnboundedChordError when either end never
 * leaves the body. */
double hilbert_cross_ratio_oracle(const ConvexBody& body, const Vector& x, const Vector& y);

/* Random convex function with exact range control on conv(vertices):
 * n_pieces random affine pieces, scale (M - m)-calibrated against the vertex
 * range of h, floor at m. */
PiecewiseAffineConvexFn random_convex_fn(const VPolytope& vp, double m, double M,
                                         std::size_t n_pieces, std::uint64_t seed);

/* Well-conditioned random fixtures per representation; dim in [1, 16].
 * H-polytopes are tangent halfspaces of the unit sphere (a rotated-cube core
 * keeps them bounded), V-polytopes random points around the origin plus a
 * small cross-polytope so the origin stays strictly interior. */
ConvexBody random_body(std::size_t dim, BodyKind kind, std::uint64_t seed);

}  // namespace cvxmetric
