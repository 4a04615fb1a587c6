#include "cvxmetric/geometry.hpp"

#include <cmath>
#include <sstream>

#include "cvxmetric/errors.hpp"
#include "cvxmetric/lp.hpp"

namespace cvxmetric {
namespace {

std::string point_str(const Vector& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ")";
  return os.str();
}

RayExitResult finite_exit(const Vector& origin, const Vector& direction, double t) {
  RayExitResult r;
  r.t = ExtReal::finite(t);
  r.boundary_point = lerp(origin, add(origin, direction), t);
  return r;
}

}  // namespace

double interior_margin(const ConvexBody& body) { return kInteriorTol * body_scale(body); }

bool is_strictly_interior(const ConvexBody& body, const Vector& p, double margin) {
  if (p.size() != body.dim()) throw DimensionError("interiority: point dimension mismatch");
  if (!all_finite(p)) throw Error("interiority: non-finite point");

  if (const HPolytope* hp = body.as_hpolytope()) {
    for (std::size_t i = 0; i < hp->a.rows; ++i) {
      double s = 0.0, rn = 0.0;
      for (std::size_t j = 0; j < hp->a.cols; ++j) {
        s += hp->a.at(i, j) * p[j];
        rn += hp->a.at(i, j) * hp->a.at(i, j);
      }
      if (hp->b[i] - s < margin * std::sqrt(rn)) return false;
    }
    return true;
  }
  if (const Ball* bl = body.as_ball()) return distance(p, bl->center) <= bl->radius - margin;

  // Weight-space margin: the best min-weight over representations of p.
  std::optional<double> w = min_weight(*body.as_vpolytope(), p);
  return w.has_value() && *w >= kInteriorTol;
}

bool is_strictly_interior(const ConvexBody& body, const Vector& p) {
  return is_strictly_interior(body, p, interior_margin(body));
}

void require_interior(const ConvexBody& body, const Vector& p, double margin) {
  if (!is_strictly_interior(body, p, margin))
    throw NotInteriorError("point " + point_str(p) + " is not strictly interior");
}

void require_interior(const ConvexBody& body, const Vector& p) {
  require_interior(body, p, interior_margin(body));
}

RayExitResult ray_exit_unchecked(const ConvexBody& body, const Vector& origin,
                                 const Vector& direction) {
  if (origin.size() != body.dim() || direction.size() != body.dim())
    throw DimensionError("ray_exit: dimension mismatch");
  if (!all_finite(origin) || !all_finite(direction)) throw Error("ray_exit: non-finite input");
  if (is_zero(direction)) return RayExitResult{};

  if (const HPolytope* hp = body.as_hpolytope()) {
    double t = HUGE_VAL;
    for (std::size_t i = 0; i < hp->a.rows; ++i) {
      double ad = 0.0, ao = 0.0;
      for (std::size_t j = 0; j < hp->a.cols; ++j) {
        ad += hp->a.at(i, j) * direction[j];
        ao += hp->a.at(i, j) * origin[j];
      }
      if (ad > 0.0) t = std::min(t, (hp->b[i] - ao) / ad);
    }
    if (!std::isfinite(t)) return RayExitResult{};
    return finite_exit(origin, direction, t);
  }

  if (const Ball* bl = body.as_ball()) {
    // Positive root of |origin + t d - c|^2 = r^2, in the cancellation-free
    // branch (cq < 0 for interior origins).
    Vector oc = sub(origin, bl->center);
    const double a2 = dot(direction, direction);
    const double bq = dot(direction, oc);
    const double cq = dot(oc, oc) - bl->radius * bl->radius;
    const double disc = bq * bq - a2 * cq;
    if (disc < 0.0) throw Error("ray_exit: ray misses the ball");
    const double sq = std::sqrt(disc);
    const double t = bq >= 0.0 ? -cq / (bq + sq) : (sq - bq) / a2;
    return finite_exit(origin, direction, t);
  }

  // Parametric feasibility: maximize t with origin + t d inside conv(V).
  const VPolytope& vp = *body.as_vpolytope();
  const std::size_t k = vp.vertices.size();
  const std::size_t n = body.dim();
  const std::size_t cols = k + 1;
  Matrix a(2 * n + 2, cols);
  Vector b(2 * n + 2), c(cols, 0.0);
  c[k] = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      a.at(2 * j, i) = vp.vertices[i][j];
      a.at(2 * j + 1, i) = -vp.vertices[i][j];
    }
    a.at(2 * j, k) = -direction[j];
    a.at(2 * j + 1, k) = direction[j];
    b[2 * j] = origin[j];
    b[2 * j + 1] = -origin[j];
  }
  for (std::size_t i = 0; i < k; ++i) {
    a.at(2 * n, i) = 1.0;
    a.at(2 * n + 1, i) = -1.0;
  }
  b[2 * n] = 1.0;
  b[2 * n + 1] = -1.0;

  LpResult r = lp_maximize_nonneg(c, a, b);
  if (r.status == LpStatus::Unbounded) return RayExitResult{};
  if (r.status == LpStatus::Infeasible)
    throw NotInteriorError("ray_exit: origin " + point_str(origin) +
                           " is not in the V-polytope");
  return finite_exit(origin, direction, r.value.value());
}

RayExitResult ray_exit(const ConvexBody& body, const Vector& origin, const Vector& direction) {
  require_interior(body, origin);
  return ray_exit_unchecked(body, origin, direction);
}

ExtReal tau(const ConvexBody& body, const Vector& x, const Vector& y) {
  const double margin = interior_margin(body);
  require_interior(body, x, margin);
  require_interior(body, y, margin);
  RayExitResult r = ray_exit_unchecked(body, x, sub(y, x));
  if (r.t.is_inf()) return r.t;
  const double t = r.t.value();
  if (t <= 1.0 + kNearBoundaryTol) {
    std::ostringstream os;
    os << "tau: exit factor " << t << " is inside the guard band above 1";
    throw NearBoundaryError(os.str());
  }
  return r.t;
}

Vector boundary_point_b(const ConvexBody& body, const Vector& x, const Vector& y) {
  ExtReal t = tau(body, x, y);
  if (t.is_inf())
    throw UnboundedDirectionError("boundary_point_b: the ray through y never leaves the body");
  return lerp(x, y, t.value());
}

ExtReal support_function(const ConvexBody& body, const Vector& d, Vector* argmax_out) {
  if (d.size() != body.dim()) throw DimensionError("support_function: dimension mismatch");
  if (!all_finite(d)) throw Error("support_function: non-finite direction");

  if (const VPolytope* vp = body.as_vpolytope()) {
    double best = dot(d, vp->vertices.front());
    std::size_t best_i = 0;
    for (std::size_t i = 1; i < vp->vertices.size(); ++i) {
      const double s = dot(d, vp->vertices[i]);
      if (s > best) {
        best = s;
        best_i = i;
      }
    }
    if (argmax_out) *argmax_out = vp->vertices[best_i];
    return ExtReal::finite(best);
  }

  if (const Ball* bl = body.as_ball()) {
    const double dn = norm(d);
    if (argmax_out) {
      if (dn > 0.0)
        *argmax_out = add(bl->center, scaled(d, bl->radius / dn));
      else
        *argmax_out = bl->center;
    }
    return ExtReal::finite(dot(d, bl->center) + bl->radius * dn);
  }

  const HPolytope& hp = *body.as_hpolytope();
  LpResult r = lp_maximize(d, hp.a, hp.b);
  if (r.status == LpStatus::Unbounded) return ExtReal::pos_inf();
  if (r.status == LpStatus::Infeasible) throw Error("support_function: empty H-polytope");
  if (argmax_out) *argmax_out = *r.argmax;
  return r.value;
}

}  // namespace cvxmetric
