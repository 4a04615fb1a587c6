#pragma once

#include <optional>

#include "cvxmetric/body.hpp"

namespace cvxmetric {

/* Relative interiority margin (scaled by body_scale; weight-space for
 * V-polytopes). */
inline constexpr double kInteriorTol = 1e-9;

/* Finite ray-exit values at or below 1 + this band are refused. */
inline constexpr double kNearBoundaryTol = 1e-12;

struct RayExitResult {
  ExtReal t = ExtReal::pos_inf();
  std::optional<Vector> boundary_point;  // present exactly when t is finite
};

double interior_margin(const ConvexBody& body);
bool is_strictly_interior(const ConvexBody& body, const Vector& p, double margin);
bool is_strictly_interior(const ConvexBody& body, const Vector& p);
void require_interior(const ConvexBody& body, const Vector& p, double margin);
void require_interior(const ConvexBody& body, const Vector& p);

/* sup { t >= 0 : origin + t * direction in body }, with the exit point when
 * finite. A zero direction (and any recession direction) yields +inf. */
RayExitResult ray_exit(const ConvexBody& body, const Vector& origin, const Vector& direction);

/* Same, skipping the interiority precondition check on origin. */
RayExitResult ray_exit_unchecked(const ConvexBody& body, const Vector& origin,
                                 const Vector& direction);

/* sup { t >= 1 : x + t (y - x) in body } for strictly interior x, y.
 * Finite values in the guard band (<= 1 + kNearBoundaryTol) raise
 * NearBoundaryError instead of flowing into downstream logs. */
ExtReal tau(const ConvexBody& body, const Vector& x, const Vector& y);

/* Exit point x + tau * (y - x); UnboundedDirectionError when tau is +inf. */
Vector boundary_point_b(const ConvexBody& body, const Vector& x, const Vector& y);

/* sup over the body of <d, .>; +inf along unbounded directions. argmax_out,
 * when given and the value is finite, receives a maximizer. */
ExtReal support_function(const ConvexBody& body, const Vector& d, Vector* argmax_out = nullptr);

}  // namespace cvxmetric
