#include "cvxmetric/metrics.hpp"

#include <cmath>
#include <sstream>

#include "cvxmetric/errors.hpp"

namespace cvxmetric {
namespace {

double funk_from_tau(const ExtReal& t, MetricDiagnostics* diag) {
  if (t.is_inf()) return 0.0;
  const double v = t.value();
  if (v > kTauInfiniteCutoff) {
    if (diag) diag->tau_treated_as_infinite = true;
    return 0.0;
  }
  return -std::log1p(-1.0 / v);
}

}  // namespace

MetricValue funk(const ConvexBody& body, const Vector& x, const Vector& y,
                 MetricDiagnostics* diag) {
  return funk_from_tau(tau(body, x, y), diag);
}

MetricValue funk_ratio(const ConvexBody& body, const Vector& x, const Vector& y) {
  ExtReal t = tau(body, x, y);
  if (t.is_inf() || t.value() > kTauInfiniteCutoff) return 0.0;
  Vector b = lerp(x, y, t.value());
  return std::log(distance(x, b) / distance(y, b));
}

MetricValue thompson(const ConvexBody& body, const Vector& x, const Vector& y) {
  return std::max(funk(body, x, y), funk(body, y, x));
}

MetricValue hilbert(const ConvexBody& body, const Vector& x, const Vector& y) {
  return 0.5 * (funk(body, x, y) + funk(body, y, x));
}

Matrix distance_matrix(const ConvexBody& body, const std::vector<Vector>& points,
                       MetricKind kind) {
  const std::size_t n = points.size();
  Matrix m(n, n);
  auto annotate = [](const char* what, std::size_t i, std::size_t j,
                     const std::exception& e) -> std::string {
    std::ostringstream os;
    os << "distance_matrix: " << what << " at pair (" << i << ", " << j << "): " << e.what();
    return os.str();
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double fij, fji;
      try {
        fij = funk(body, points[i], points[j]);
        fji = funk(body, points[j], points[i]);
      } catch (const NearBoundaryError& e) {
        throw NearBoundaryError(annotate("near-boundary pair", i, j, e));
      } catch (const NotInteriorError& e) {
        throw NotInteriorError(annotate("non-interior point", i, j, e));
      }
      switch (kind) {
        case MetricKind::Funk:
          m.at(i, j) = fij;
          m.at(j, i) = fji;
          break;
        case MetricKind::Thompson:
          m.at(i, j) = m.at(j, i) = std::max(fij, fji);
          break;
        case MetricKind::Hilbert:
          m.at(i, j) = m.at(j, i) = 0.5 * (fij + fji);
          break;
      }
    }
  }
  return m;
}

}  // namespace cvxmetric
