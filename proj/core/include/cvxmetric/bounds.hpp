#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cvxmetric/body.hpp"
#include "cvxmetric/geometry.hpp"

namespace cvxmetric {

inline constexpr double kCertifyTol = 1e-9;

/* Convex function with a declared range; evaluations outside
 * [m - tol, M + tol] raise RangeViolation. */
struct BoundedConvexFn {
  std::function<double(const Vector&)> eval;
  double m = 0.0;
  double M = 1.0;
};

using PointPair = std::pair<Vector, Vector>;

struct BoundsInterval {
  double lower = 0.0;  // -(M - m) / tau(y, x), -0 on the infinite branch
  double upper = 0.0;  // (M - m) / tau(x, y), 0 on the infinite branch
  double m = 0.0;
  double M = 0.0;
};

BoundsInterval variation_bounds(const ConvexBody& body, const Vector& x, const Vector& y,
                                double m, double M);

/* The same bounds restated through the metrics; the Funk form reproduces
 * variation_bounds via 1 - e^{-F} = 1/tau, computed with expm1/log1p. */
struct MetricFormBounds {
  BoundsInterval funk_form;
  BoundsInterval thompson_form;  // symmetric: +-(M - m)(1 - e^{-T})
  BoundsInterval hilbert_form;   // symmetric: +-(M - m)(1 - e^{-2H})
};

MetricFormBounds metric_form_bounds(const ConvexBody& body, const Vector& x, const Vector& y,
                                    double m, double M);

struct LipschitzRecord {
  PointPair pair;
  double lhs = 0.0;           // |f(y) - f(x)|
  double thompson_rhs = 0.0;  // (M - m) T
  double hilbert_rhs = 0.0;   // 2 (M - m) H
  bool pass = false;
};

std::vector<LipschitzRecord> lipschitz_certificates(const ConvexBody& body,
                                                    const BoundedConvexFn& f,
                                                    const std::vector<PointPair>& pairs,
                                                    double tol = kCertifyTol);

struct BoundReport {
  PointPair pair;
  double observed = 0.0;  // f(y) - f(x)
  BoundsInterval interval;
  double slack_lower = 0.0;  // observed - lower
  double slack_upper = 0.0;  // upper - observed
  bool pass = false;
};

std::vector<BoundReport> certify(const ConvexBody& body, const BoundedConvexFn& f,
                                 const std::vector<PointPair>& pairs,
                                 double tol = kCertifyTol);

}  // namespace cvxmetric
