#include "cvxmetric/extremal.hpp"

#include <cmath>

#include "cvxmetric/errors.hpp"

namespace cvxmetric {

ExtReal sigma(const ConvexBody& body, const Vector& z, const Vector& u) {
  require_interior(body, z);
  return ray_exit_unchecked(body, z, u).t;
}

ExtremalFn build_extremal(const ConvexBody& body, const Vector& x, const Vector& y, double m,
                          double M, Orientation orientation) {
  if (!std::isfinite(m) || !std::isfinite(M) || m > M)
    throw Error("build_extremal: range [m, M] must be finite with m <= M");
  const double margin = interior_margin(body);
  require_interior(body, x, margin);
  require_interior(body, y, margin);

  // The Lower construction is the Upper one for the swapped pair.
  const Vector& src = orientation == Orientation::Upper ? x : y;
  const Vector& dst = orientation == Orientation::Upper ? y : x;

  ExtReal t = ExtReal::pos_inf();
  RayExitResult r = ray_exit_unchecked(body, src, sub(dst, src));
  if (r.t.is_finite()) {
    if (r.t.value() <= 1.0 + kNearBoundaryTol)
      throw NearBoundaryError("build_extremal: anchor pair sits in the guard band");
    t = r.t;
  }

  const bool constant = t.is_inf() || m == M;
  Vector u(body.dim(), 0.0);
  if (!constant) u = scaled(sub(dst, src), t.value());
  return ExtremalFn(body, x, y, std::move(u), m, M, orientation, constant, t, margin);
}

double eval_extremal(const ExtremalFn& fn, const Vector& z) {
  require_interior(fn.body(), z, fn.margin());
  if (fn.constant()) return fn.m();
  ExtReal s = ray_exit_unchecked(fn.body(), z, fn.direction()).t;
  if (s.is_inf()) return fn.m();
  const double phi = 1.0 - s.value();  // convex in z; <= 1 on the body
  return fn.m() + (fn.M() - fn.m()) * std::max(phi, 0.0);
}

AttainmentResult attainment_check(const ConvexBody& body, const Vector& x, const Vector& y,
                                  double m, double M, double tol) {
  ExtremalFn up = build_extremal(body, x, y, m, M, Orientation::Upper);
  ExtremalFn low = build_extremal(body, x, y, m, M, Orientation::Lower);

  const double up_target =
      up.anchor_tau().is_inf() ? 0.0 : (M - m) / up.anchor_tau().value();
  const double low_target =
      low.anchor_tau().is_inf() ? -0.0 : -(M - m) / low.anchor_tau().value();

  const double up_diff = eval_extremal(up, y) - eval_extremal(up, x);
  const double low_diff = eval_extremal(low, y) - eval_extremal(low, x);

  AttainmentResult res;
  res.upper_gap = std::abs(up_diff - up_target);
  res.lower_gap = std::abs(low_diff - low_target);
  res.upper_attained = res.upper_gap <= tol;
  res.lower_attained = res.lower_gap <= tol;
  return res;
}

}  // namespace cvxmetric
