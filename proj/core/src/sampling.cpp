#include "cvxmetric/sampling.hpp"

#include <cmath>

#include "cvxmetric/errors.hpp"
#include "cvxmetric/geometry.hpp"
#include "cvxmetric/rng.hpp"

namespace cvxmetric {
namespace {

Vector gaussian_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.normal();
  return v;
}

}  // namespace

std::vector<Vector> sample_interior(const ConvexBody& body, std::uint64_t seed,
                                    std::size_t count) {
  Rng rng(seed);
  const std::size_t n = body.dim();
  std::vector<Vector> out;
  out.reserve(count);

  if (const Ball* bl = body.as_ball()) {
    while (out.size() < count) {
      Vector dir = gaussian_vector(rng, n);
      double dn = norm(dir);
      if (dn < 1e-12) continue;
      // Radius factor 0.99 keeps a definite boundary margin; u^(1/n) makes
      // the radial law volume-uniform.
      const double r = bl->radius * 0.99 * std::pow(rng.uniform(), 1.0 / double(n));
      out.push_back(add(bl->center, scaled(dir, r / dn)));
    }
    return out;
  }

  if (const VPolytope* vp = body.as_vpolytope()) {
    const std::size_t k = vp->vertices.size();
    while (out.size() < count) {
      // Dirichlet(1) weights mixed with the barycenter: every weight is at
      // least 0.001 / k.
      Vector w(k);
      double sum = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        w[i] = -std::log(1.0 - rng.uniform());
        sum += w[i];
      }
      if (sum <= 0.0) continue;
      Vector p(n, 0.0);
      for (std::size_t i = 0; i < k; ++i) {
        const double lam = 0.999 * (w[i] / sum) + 0.001 / double(k);
        for (std::size_t j = 0; j < n; ++j) p[j] += lam * vp->vertices[i][j];
      }
      out.push_back(std::move(p));
    }
    return out;
  }

  BoundingBox box = bounding_box(body);
  if (!box.bounded)
    throw SamplingError("sample_interior: H-polytope is unbounded, no rejection box");
  const double margin = interior_margin(body);
  const std::size_t budget = 100000 * count;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > budget)
      throw SamplingError("sample_interior: rejection budget exhausted");
    Vector p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = rng.uniform(box.lo[j], box.hi[j]);
    if (is_strictly_interior(body, p, margin)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace cvxmetric
