#include "cvxmetric/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "cvxmetric/errors.hpp"
#include "cvxmetric/rng.hpp"

namespace cvxmetric {
namespace {

constexpr double kDoublingCap = 1e12;

Vector gaussian_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.normal();
  return v;
}

Vector unit_vector(Rng& rng, std::size_t n) {
  for (;;) {
    Vector v = gaussian_vector(rng, n);
    const double vn = norm(v);
    if (vn > 1e-9) return scaled(v, 1.0 / vn);
  }
}

/* Sharp boundary predicate along inside(t) -> !inside(t): exact checks for
 * balls and H-polytopes, the sign of the min-weight LP for V-polytopes. The
 * crossing sits on the true boundary up to solver rounding. */
bool sharp_inside(const ConvexBody& body, const Vector& p) {
  if (const VPolytope* vp = body.as_vpolytope()) {
    std::optional<double> w = min_weight(*vp, p);
    return w.has_value() && *w >= 0.0;
  }
  return contains(body, p, 0.0);
}

double bisect_exit(const ConvexBody& body, const Vector& x, const Vector& d, double lo,
                   double hi, double tol) {
  while (hi - lo > tol * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    if (sharp_inside(body, add(x, scaled(d, mid))))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ExtReal tau_bisection_oracle(const ConvexBody& body, const Vector& x, const Vector& y,
                             double tol) {
  if (!(tol > 0.0)) throw Error("tau_bisection_oracle: tol must be positive");
  const double margin = interior_margin(body);
  require_interior(body, x, margin);
  require_interior(body, y, margin);
  if (x == y) return ExtReal::pos_inf();

  const Vector d = sub(y, x);
  double lo = 1.0, hi = 2.0;
  while (sharp_inside(body, add(x, scaled(d, hi)))) {
    lo = hi;
    hi *= 2.0;
    if (hi > kDoublingCap) return ExtReal::pos_inf();
  }
  return ExtReal::finite(bisect_exit(body, x, d, lo, hi, tol));
}

double hilbert_cross_ratio_oracle(const ConvexBody& body, const Vector& x, const Vector& y) {
  if (x == y) return 0.0;
  ExtReal fwd = tau_bisection_oracle(body, x, y, 1e-13);
  ExtReal bwd = tau_bisection_oracle(body, y, x, 1e-13);
  if (fwd.is_inf() || bwd.is_inf())
    throw UnboundedChordError("hilbert_cross_ratio_oracle: chord never leaves the body");
  const Vector b = lerp(x, y, fwd.value());
  const Vector a = lerp(y, x, bwd.value());
  return 0.5 * std::log((distance(a, y) * distance(b, x)) /
                        (distance(a, x) * distance(b, y)));
}

PiecewiseAffineConvexFn random_convex_fn(const VPolytope& vp, double m, double M,
                                         std::size_t n_pieces, std::uint64_t seed) {
  if (vp.vertices.empty()) throw GeneratorError("random_convex_fn: empty vertex set");
  if (n_pieces == 0) throw GeneratorError("random_convex_fn: need at least one piece");
  if (!(m < M)) throw GeneratorError("random_convex_fn: requires m < M");
  const std::size_t n = vp.vertices.front().size();

  Rng rng(seed);
  std::vector<AffinePiece> pieces;
  pieces.reserve(n_pieces);
  for (std::size_t i = 0; i < n_pieces; ++i)
    pieces.push_back({gaussian_vector(rng, n), rng.uniform(-1.0, 1.0)});

  auto h = [&](const Vector& z) {
    double best = dot(pieces.front().gradient, z) + pieces.front().offset;
    for (std::size_t i = 1; i < pieces.size(); ++i)
      best = std::max(best, dot(pieces[i].gradient, z) + pieces[i].offset);
    return best;
  };
  double h_max = h(vp.vertices.front());
  double h_min = h_max;
  for (const Vector& v : vp.vertices) {
    const double hv = h(v);
    h_max = std::max(h_max, hv);
    h_min = std::min(h_min, hv);
  }
  const double range = h_max - h_min;
  if (!std::isfinite(range)) throw GeneratorError("random_convex_fn: degenerate vertex set");

  const double scale = rng.uniform(0.5, 2.0) * (M - m) / (1.0 + range);
  return PiecewiseAffineConvexFn(std::move(pieces), m, M, scale, h_max);
}

ConvexBody random_body(std::size_t dim, BodyKind kind, std::uint64_t seed) {
  if (dim < 1 || dim > kMaxDim) throw GeneratorError("random_body: dim must be in [1, 16]");
  Rng rng(seed);

  if (kind == BodyKind::Ball) {
    Vector center(dim);
    for (double& c : center) c = rng.uniform(-1.0, 1.0);
    return ConvexBody::ball(std::move(center), rng.uniform(0.5, 2.0));
  }

  if (kind == BodyKind::VPolytope) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const std::size_t extra = dim + 2 + rng.next_below(2 * dim - 1);
      std::vector<Vector> vertices;
      for (std::size_t i = 0; i < extra; ++i)
        vertices.push_back(scaled(unit_vector(rng, dim), rng.uniform(0.7, 1.3)));
      // Cross-polytope spikes keep a ball of radius 0.25/sqrt(dim) around the
      // origin strictly inside.
      for (std::size_t j = 0; j < dim; ++j) {
        Vector plus(dim, 0.0), minus(dim, 0.0);
        plus[j] = 0.25;
        minus[j] = -0.25;
        vertices.push_back(std::move(plus));
        vertices.push_back(std::move(minus));
      }
      double min_dist = HUGE_VAL;
      for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
          min_dist = std::min(min_dist, distance(vertices[i], vertices[j]));
      if (min_dist < 1e-6) continue;
      return ConvexBody::vpolytope(std::move(vertices));
    }
    throw GeneratorError("random_body: vertex conditioning retries exhausted");
  }

  // Tangent halfspaces of the unit sphere: a randomly rotated cube keeps the
  // polytope bounded; extra tangent cuts vary the shape.
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vector> cols;
    bool ok = true;
    for (std::size_t j = 0; j < dim && ok; ++j) {
      Vector v = gaussian_vector(rng, dim);
      for (const Vector& q : cols) {
        const double proj = dot(v, q);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * q[i];
      }
      const double vn = norm(v);
      if (vn < 1e-8) {
        ok = false;
        break;
      }
      cols.push_back(scaled(v, 1.0 / vn));
    }
    if (!ok) continue;

    std::vector<Vector> normals;
    for (const Vector& q : cols) {
      normals.push_back(q);
      normals.push_back(scaled(q, -1.0));
    }
    const std::size_t extra = rng.next_below(dim + 1);
    for (std::size_t i = 0; i < extra; ++i) {
      Vector u = unit_vector(rng, dim);
      bool spread = true;
      for (const Vector& existing : normals)
        if (dot(u, existing) > 0.999) spread = false;
      if (spread) normals.push_back(std::move(u));
    }
    return ConvexBody::hpolytope(Matrix::from_rows(normals),
                                 Vector(normals.size(), 1.0));
  }
  throw GeneratorError("random_body: orthogonalization retries exhausted");
}

}  // namespace cvxmetric
