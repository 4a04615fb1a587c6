#include "cvxmetric/bounds.hpp"

#include <cmath>
#include <sstream>

#include "cvxmetric/errors.hpp"
#include "cvxmetric/metrics.hpp"

namespace cvxmetric {
namespace {

void check_range(double m, double M) {
  if (!std::isfinite(m) || !std::isfinite(M) || m > M)
    throw Error("bounds: range [m, M] must be finite with m <= M");
}

double checked_eval(const BoundedConvexFn& f, const Vector& z, double tol) {
  const double v = f.eval(z);
  if (!(v >= f.m - tol) || !(v <= f.M + tol)) {
    std::ostringstream os;
    os << "function value " << v << " escapes declared range [" << f.m << ", " << f.M << "]";
    throw RangeViolation(os.str());
  }
  return v;
}

}  // namespace

BoundsInterval variation_bounds(const ConvexBody& body, const Vector& x, const Vector& y,
                                double m, double M) {
  check_range(m, M);
  BoundsInterval out;
  out.m = m;
  out.M = M;
  ExtReal fwd = tau(body, x, y);
  ExtReal bwd = tau(body, y, x);
  out.upper = fwd.is_inf() ? 0.0 : (M - m) / fwd.value();
  out.lower = bwd.is_inf() ? -0.0 : -(M - m) / bwd.value();
  return out;
}

MetricFormBounds metric_form_bounds(const ConvexBody& body, const Vector& x, const Vector& y,
                                    double m, double M) {
  check_range(m, M);
  const double fwd = funk(body, x, y);
  const double bwd = funk(body, y, x);
  const double t = std::max(fwd, bwd);
  const double h2 = fwd + bwd;  // 2 * hilbert

  MetricFormBounds out;
  out.funk_form = {-(M - m) * -std::expm1(-bwd), (M - m) * -std::expm1(-fwd), m, M};
  const double tr = (M - m) * -std::expm1(-t);
  out.thompson_form = {-tr, tr, m, M};
  const double hr = (M - m) * -std::expm1(-h2);
  out.hilbert_form = {-hr, hr, m, M};
  return out;
}

std::vector<LipschitzRecord> lipschitz_certificates(const ConvexBody& body,
                                                    const BoundedConvexFn& f,
                                                    const std::vector<PointPair>& pairs,
                                                    double tol) {
  check_range(f.m, f.M);
  std::vector<LipschitzRecord> out;
  out.reserve(pairs.size());
  for (const PointPair& pr : pairs) {
    LipschitzRecord rec;
    rec.pair = pr;
    rec.lhs = std::abs(checked_eval(f, pr.second, tol) - checked_eval(f, pr.first, tol));
    rec.thompson_rhs = (f.M - f.m) * thompson(body, pr.first, pr.second);
    rec.hilbert_rhs = 2.0 * (f.M - f.m) * hilbert(body, pr.first, pr.second);
    rec.pass = rec.lhs <= rec.thompson_rhs + tol && rec.lhs <= rec.hilbert_rhs + tol;
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<BoundReport> certify(const ConvexBody& body, const BoundedConvexFn& f,
                                 const std::vector<PointPair>& pairs, double tol) {
  check_range(f.m, f.M);
  std::vector<BoundReport> out;
  out.reserve(pairs.size());
  for (const PointPair& pr : pairs) {
    BoundReport rep;
    rep.pair = pr;
    rep.interval = variation_bounds(body, pr.first, pr.second, f.m, f.M);
    rep.observed = checked_eval(f, pr.second, tol) - checked_eval(f, pr.first, tol);
    rep.slack_lower = rep.observed - rep.interval.lower;
    rep.slack_upper = rep.interval.upper - rep.observed;
    rep.pass = rep.slack_lower >= -tol && rep.slack_upper >= -tol;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace cvxmetric
