#include "cvxmetric/gauge.hpp"

#include <cmath>

#include "cvxmetric/errors.hpp"

namespace cvxmetric {

GaugeFn make_gauge_fn(const ConvexBody& body, const Vector& x0) {
  require_interior(body, x0);
  return GaugeFn{body, x0};
}

double gauge_value(const GaugeFn& fn, const Vector& x) {
  ExtReal t = tau(fn.body, fn.center, x);
  return t.is_inf() ? 0.0 : 1.0 / t.value();
}

bool max_subdiff_contains(const ConvexBody& body, const Vector& x0, const Vector& zeta,
                          double m, double M, double tol, ExtReal* support_out) {
  if (zeta.size() != body.dim()) throw DimensionError("max_subdiff_contains: zeta dimension");
  if (!std::isfinite(m) || !std::isfinite(M) || m > M)
    throw Error("max_subdiff_contains: range [m, M] must be finite with m <= M");
  require_interior(body, x0);
  if (m == M) return norm(zeta) <= tol;  // the maximal subdifferential is {0}

  // Membership in (M - m) * (gauge subdifferential at the center) is the
  // polar test: support of (body - x0) at zeta / (M - m) at most 1.
  const Vector w = scaled(zeta, 1.0 / (M - m));
  ExtReal s = support_function(body, w);
  if (s.is_inf()) {
    if (support_out) *support_out = s;
    return false;
  }
  const double val = s.value() - dot(w, x0);
  if (support_out) *support_out = ExtReal::finite(val);
  return val <= 1.0 + tol;
}

ConvexBody max_subdiff_hrep(const VPolytope& vp, const Vector& x0, double m, double M) {
  if (!std::isfinite(m) || !std::isfinite(M) || m > M)
    throw Error("max_subdiff_hrep: range [m, M] must be finite with m <= M");
  ConvexBody body = ConvexBody::vpolytope(vp.vertices);
  require_interior(body, x0);

  std::vector<Vector> rows;
  Vector rhs;
  for (const Vector& v : vp.vertices) {
    Vector r = sub(v, x0);
    if (is_zero(r)) continue;  // vacuous row <0, zeta> <= M - m
    rows.push_back(std::move(r));
    rhs.push_back(M - m);
  }
  if (rows.empty()) throw Error("max_subdiff_hrep: degenerate vertex set");
  return ConvexBody::hpolytope(Matrix::from_rows(rows), std::move(rhs));
}

Vector subgradient_of_max_affine(const PiecewiseAffineConvexFn& f, const Vector& x0) {
  if (x0.size() != f.dim()) throw DimensionError("subgradient_of_max_affine: dimension");
  if (f(x0) <= f.m() + 1e-12)
    throw ClampedPointError("subgradient_of_max_affine: floor clamp active at the point");
  return scaled(f.pieces()[f.active_piece(x0)].gradient, f.scale());
}

}  // namespace cvxmetric
