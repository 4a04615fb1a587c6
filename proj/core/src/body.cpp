#include "cvxmetric/body.hpp"

#include <algorithm>
#include <cmath>

#include "cvxmetric/errors.hpp"
#include "cvxmetric/lp.hpp"

namespace cvxmetric {
namespace {

void check_dim(std::size_t dim) {
  if (dim < 1 || dim > kMaxDim) throw DimensionError("body dimension must be in [1, 16]");
}

}  // namespace

ConvexBody ConvexBody::hpolytope(Matrix a, Vector b) {
  check_dim(a.cols);
  if (b.size() != a.rows) throw DimensionError("hpolytope: A rows vs b length");
  for (std::size_t i = 0; i < a.rows; ++i) {
    double rn = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) {
      if (!std::isfinite(a.at(i, j))) throw Error("hpolytope: non-finite entry in A");
      rn += a.at(i, j) * a.at(i, j);
    }
    if (rn == 0.0) throw Error("hpolytope: zero normal row");
    if (!std::isfinite(b[i])) throw Error("hpolytope: non-finite entry in b");
  }
  const std::size_t dim = a.cols;
  return ConvexBody(HPolytope{std::move(a), std::move(b)}, dim);
}

ConvexBody ConvexBody::vpolytope(std::vector<Vector> vertices) {
  if (vertices.empty()) throw Error("vpolytope: at least one vertex required");
  check_dim(vertices.front().size());
  const std::size_t dim = vertices.front().size();
  for (const Vector& v : vertices) {
    if (v.size() != dim) throw DimensionError("vpolytope: ragged vertex list");
    if (!all_finite(v)) throw Error("vpolytope: non-finite vertex");
  }
  return ConvexBody(VPolytope{std::move(vertices)}, dim);
}

ConvexBody ConvexBody::ball(Vector center, double radius) {
  check_dim(center.size());
  if (!all_finite(center)) throw Error("ball: non-finite center");
  if (!std::isfinite(radius) || radius <= 0.0) throw Error("ball: radius must be positive");
  const std::size_t dim = center.size();
  return ConvexBody(Ball{std::move(center), radius}, dim);
}

BodyKind ConvexBody::kind() const {
  if (as_hpolytope()) return BodyKind::HPolytope;
  if (as_vpolytope()) return BodyKind::VPolytope;
  return BodyKind::Ball;
}

std::optional<double> min_weight(const VPolytope& vp, const Vector& p) {
  const std::size_t k = vp.vertices.size();
  const std::size_t n = p.size();
  // lambda_i = t + mu_i with mu >= 0, t = tp - tm; maximize t subject to
  // sum lambda_i = 1 and sum lambda_i v_i = p.
  const std::size_t cols = k + 2;
  Matrix a(2 * n + 2, cols);
  Vector b(2 * n + 2), c(cols, 0.0);
  c[k] = 1.0;
  c[k + 1] = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double sum_v = 0.0;
    for (std::size_t i = 0; i < k; ++i) sum_v += vp.vertices[i][j];
    for (std::size_t i = 0; i < k; ++i) {
      a.at(2 * j, i) = vp.vertices[i][j];
      a.at(2 * j + 1, i) = -vp.vertices[i][j];
    }
    a.at(2 * j, k) = sum_v;
    a.at(2 * j, k + 1) = -sum_v;
    a.at(2 * j + 1, k) = -sum_v;
    a.at(2 * j + 1, k + 1) = sum_v;
    b[2 * j] = p[j];
    b[2 * j + 1] = -p[j];
  }
  for (std::size_t i = 0; i < k; ++i) {
    a.at(2 * n, i) = 1.0;
    a.at(2 * n + 1, i) = -1.0;
  }
  a.at(2 * n, k) = static_cast<double>(k);
  a.at(2 * n, k + 1) = -static_cast<double>(k);
  a.at(2 * n + 1, k) = -static_cast<double>(k);
  a.at(2 * n + 1, k + 1) = static_cast<double>(k);
  b[2 * n] = 1.0;
  b[2 * n + 1] = -1.0;

  LpResult r = lp_maximize_nonneg(c, a, b);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.value.value();
}

bool contains(const ConvexBody& body, const Vector& p, double tol) {
  if (p.size() != body.dim()) throw DimensionError("contains: point dimension mismatch");
  if (!(tol >= 0.0)) throw Error("contains: tol must be >= 0");
  if (!all_finite(p)) throw Error("contains: non-finite point");

  if (const HPolytope* hp = body.as_hpolytope()) {
    for (std::size_t i = 0; i < hp->a.rows; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < hp->a.cols; ++j) s += hp->a.at(i, j) * p[j];
      if (s > hp->b[i] + tol) return false;
    }
    return true;
  }
  if (const Ball* bl = body.as_ball()) return distance(p, bl->center) <= bl->radius + tol;

  // Convex-combination feasibility: sum lambda v = p within tol per
  // coordinate, sum lambda = 1, lambda >= 0.
  const VPolytope& vp = *body.as_vpolytope();
  const std::size_t k = vp.vertices.size();
  const std::size_t n = body.dim();
  Matrix a(2 * n + 2, k);
  Vector b(2 * n + 2), c(k, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      a.at(2 * j, i) = vp.vertices[i][j];
      a.at(2 * j + 1, i) = -vp.vertices[i][j];
    }
    b[2 * j] = p[j] + tol;
    b[2 * j + 1] = -p[j] + tol;
  }
  for (std::size_t i = 0; i < k; ++i) {
    a.at(2 * n, i) = 1.0;
    a.at(2 * n + 1, i) = -1.0;
  }
  b[2 * n] = 1.0;
  b[2 * n + 1] = -1.0;
  return lp_maximize_nonneg(c, a, b).status == LpStatus::Optimal;
}

BoundingBox bounding_box(const ConvexBody& body) {
  const std::size_t n = body.dim();
  BoundingBox box;
  box.lo.assign(n, 0.0);
  box.hi.assign(n, 0.0);

  if (const Ball* bl = body.as_ball()) {
    for (std::size_t j = 0; j < n; ++j) {
      box.lo[j] = bl->center[j] - bl->radius;
      box.hi[j] = bl->center[j] + bl->radius;
    }
    return box;
  }
  if (const VPolytope* vp = body.as_vpolytope()) {
    for (std::size_t j = 0; j < n; ++j) {
      double lo = vp->vertices.front()[j], hi = lo;
      for (const Vector& v : vp->vertices) {
        lo = std::min(lo, v[j]);
        hi = std::max(hi, v[j]);
      }
      box.lo[j] = lo;
      box.hi[j] = hi;
    }
    return box;
  }

  const HPolytope& hp = *body.as_hpolytope();
  for (std::size_t j = 0; j < n; ++j) {
    Vector d(n, 0.0);
    d[j] = 1.0;
    LpResult up = lp_maximize(d, hp.a, hp.b);
    d[j] = -1.0;
    LpResult down = lp_maximize(d, hp.a, hp.b);
    if (up.status == LpStatus::Infeasible || down.status == LpStatus::Infeasible)
      throw Error("bounding_box: empty H-polytope");
    if (up.status == LpStatus::Unbounded || down.status == LpStatus::Unbounded) {
      box.bounded = false;
      box.lo[j] = -HUGE_VAL;
      box.hi[j] = HUGE_VAL;
      continue;
    }
    box.hi[j] = up.value.value();
    box.lo[j] = -down.value.value();
  }
  return box;
}

double body_scale(const ConvexBody& body) {
  if (const Ball* bl = body.as_ball()) return 2.0 * bl->radius;
  if (const VPolytope* vp = body.as_vpolytope()) {
    double best = 0.0;
    for (std::size_t i = 0; i < vp->vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vp->vertices.size(); ++j)
        best = std::max(best, distance(vp->vertices[i], vp->vertices[j]));
    return best > 0.0 ? best : 1.0;
  }
  BoundingBox box = bounding_box(body);
  if (!box.bounded) return 1.0;
  double s = distance(box.hi, box.lo);
  return s > 0.0 ? s : 1.0;
}

}  // namespace cvxmetric
