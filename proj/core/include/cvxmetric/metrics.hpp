#pragma once

#include "cvxmetric/geometry.hpp"

namespace cvxmetric {

/* Metric values are finite nonnegative reals on a log scale; the infinite
 * ray-exit branch maps to 0 by convention. */
using MetricValue = double;

/* Finite ray-exit values beyond this are treated as infinite for metric
 * purposes (the log term is below double noise). */
inline constexpr double kTauInfiniteCutoff = 1e12;

struct MetricDiagnostics {
  bool tau_treated_as_infinite = false;
};

/* log of the chord ratio toward y, computed as -log1p(-1/tau). */
MetricValue funk(const ConvexBody& body, const Vector& x, const Vector& y,
                 MetricDiagnostics* diag = nullptr);

/* Same quantity through the boundary-point distance ratio. */
MetricValue funk_ratio(const ConvexBody& body, const Vector& x, const Vector& y);

MetricValue thompson(const ConvexBody& body, const Vector& x, const Vector& y);
MetricValue hilbert(const ConvexBody& body, const Vector& x, const Vector& y);

enum class MetricKind { Funk, Thompson, Hilbert };

/* Pairwise distances, zero diagonal. Symmetric kinds reuse the same two
 * directed evaluations per unordered pair, so symmetry is exact. */
Matrix distance_matrix(const ConvexBody& body, const std::vector<Vector>& points,
                       MetricKind kind);

}  // namespace cvxmetric
