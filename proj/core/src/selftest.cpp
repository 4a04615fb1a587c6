#include "cvxmetric/selftest.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "cvxmetric/bounds.hpp"
#include "cvxmetric/errors.hpp"
#include "cvxmetric/extremal.hpp"
#include "cvxmetric/gauge.hpp"
#include "cvxmetric/metrics.hpp"
#include "cvxmetric/oracles.hpp"
#include "cvxmetric/rng.hpp"
#include "cvxmetric/sampling.hpp"

namespace cvxmetric {
namespace {

constexpr BodyKind kKinds[] = {BodyKind::Ball, BodyKind::VPolytope, BodyKind::HPolytope};

class Harness {
 public:
  explicit Harness(std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.name = std::move(name);
  }

  void check(bool ok, const std::string& context) {
    ++result_.checked;
    if (!ok) {
      ++result_.failed;
      if (result_.detail.empty()) result_.detail = context;
    }
  }

  void fail(const std::string& context) { check(false, context); }

  SuiteResult finish() {
    result_.pass = result_.failed == 0;
    result_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

 private:
  SuiteResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::string describe(std::size_t i, std::size_t dim, BodyKind kind, const char* what) {
  const char* k = kind == BodyKind::Ball        ? "ball"
                  : kind == BodyKind::VPolytope ? "vpolytope"
                                                : "hpolytope";
  std::ostringstream ss;
  ss << what << " (instance " << i << ", " << k << ", dim " << dim << ")";
  return ss.str();
}

/* Vertex set whose convex hull covers the body, for range-calibrating a
 * generated function: the body's own vertices when available, else the
 * corners of its bounding box. */
VPolytope covering_vertices(const ConvexBody& body) {
  if (const VPolytope* vp = body.as_vpolytope()) return *vp;
  const BoundingBox box = bounding_box(body);
  const std::size_t n = body.dim();
  std::vector<Vector> corners;
  corners.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Vector c(n);
    for (std::size_t j = 0; j < n; ++j)
      c[j] = (mask >> j) & 1 ? box.hi[j] : box.lo[j];
    corners.push_back(std::move(c));
  }
  return VPolytope{std::move(corners)};
}

struct Instance {
  ConvexBody body;
  Vector x, y;
  double m = 0.0, M = 1.0;
};

Instance make_instance(std::size_t i, std::uint64_t seed, std::size_t max_dim = 8) {
  const BodyKind kind = kKinds[i % 3];
  const std::size_t dim = 1 + (i / 3) % max_dim;
  Rng rng = Rng(seed).split(0x1157A4CE ^ i);
  ConvexBody body = random_body(dim, kind, rng.next_u64());
  std::vector<Vector> pts = sample_interior(body, rng.next_u64(), 2);
  const double m = rng.uniform(-2.0, 2.0);
  const double M = m + rng.uniform(0.25, 3.0);
  return Instance{std::move(body), std::move(pts[0]), std::move(pts[1]), m, M};
}

BoundedConvexFn as_bounded(const PiecewiseAffineConvexFn& fn) {
  return BoundedConvexFn{[fn](const Vector& z) { return fn(z); }, fn.m(), fn.M()};
}

}  // namespace

SuiteResult suite_bound_soundness(std::uint64_t seed, std::size_t instances) {
  Harness h("bound-soundness");
  for (std::size_t i = 0; i < instances; ++i) {
    const BodyKind kind = kKinds[i % 3];
    const std::size_t dim = 1 + (i / 3) % 8;
    try {
      Instance inst = make_instance(i, seed);
      PiecewiseAffineConvexFn fn = random_convex_fn(
          covering_vertices(inst.body), inst.m, inst.M, 2 + i % 5, seed ^ (0xF17 + i));
      std::vector<BoundReport> reports =
          certify(inst.body, as_bounded(fn), {{inst.x, inst.y}}, kCertifyTol);
      for (const BoundReport& r : reports)
        h.check(r.pass, describe(i, dim, kind, "bound violated"));
    } catch (const Error& e) {
      h.fail(describe(i, dim, kind, e.what()));
    }
  }
  return h.finish();
}

SuiteResult suite_attainment(std::uint64_t seed, std::size_t instances) {
  Harness h("extremal-attainment");
  for (std::size_t i = 0; i < instances; ++i) {
    const BodyKind kind = kKinds[i % 3];
    const std::size_t dim = 1 + (i / 3) % 8;
    try {
      Instance inst = make_instance(i, seed);
      if (i % 11 == 7) inst.y = inst.x;   // infinite branch: coincident pair
      if (i % 13 == 5) inst.M = inst.m;   // degenerate range
      AttainmentResult a =
          attainment_check(inst.body, inst.x, inst.y, inst.m, inst.M, 1e-9);
      h.check(a.upper_attained, describe(i, dim, kind, "upper target missed"));
      h.check(a.lower_attained, describe(i, dim, kind, "lower target missed"));
    } catch (const Error& e) {
      h.fail(describe(i, dim, kind, e.what()));
    }
  }

  /* Recession directions with x != y: a half-line and a slab. */
  try {
    ConvexBody halfline = ConvexBody::hpolytope(Matrix::from_rows({{-1.0}}), {0.0});
    AttainmentResult a = attainment_check(halfline, {0.5}, {1.5}, 0.0, 1.0, 1e-9);
    h.check(a.upper_attained && a.lower_attained, "half-line recession pair");
    ConvexBody slab =
        ConvexBody::hpolytope(Matrix::from_rows({{1.0, 0.0}, {-1.0, 0.0}}), {1.0, 1.0});
    a = attainment_check(slab, {0.0, 0.0}, {0.25, 2.0}, -1.0, 2.0, 1e-9);
    h.check(a.upper_attained && a.lower_attained, "slab recession pair");
  } catch (const Error& e) {
    h.fail(std::string("unbounded fixtures: ") + e.what());
  }
  return h.finish();
}

SuiteResult suite_funk_identity(std::uint64_t seed, std::size_t instances) {
  Harness h("funk-identity");
  for (std::size_t i = 0; i < instances; ++i) {
    const BodyKind kind = kKinds[i % 3];
    const std::size_t dim = 1 + (i / 3) % 8;
    try {
      Instance inst = make_instance(i, seed);
      const ExtReal t = tau(inst.body, inst.x, inst.y);
      if (t.is_inf()) {
        h.check(funk(inst.body, inst.x, inst.y) == 0.0,
                describe(i, dim, kind, "funk nonzero on the infinite branch"));
        continue;
      }
      const double f = funk(inst.body, inst.x, inst.y);
      const double lhs = -std::expm1(-f);
      h.check(std::fabs(lhs - 1.0 / t.value()) <= 1e-12,
              describe(i, dim, kind, "1 - e^{-F} vs 1/tau"));
      h.check(std::fabs(f - funk_ratio(inst.body, inst.x, inst.y)) <= 1e-9,
              describe(i, dim, kind, "funk vs distance-ratio form"));
    } catch (const Error& e) {
      h.fail(describe(i, dim, kind, e.what()));
    }
  }
  return h.finish();
}

SuiteResult suite_ball_ground_truth(std::uint64_t seed, std::size_t pairs) {
  Harness h("ball-ground-truth");
  try {
    ConvexBody disk = ConvexBody::ball({0.0, 0.0}, 1.0);
    const double fixed = hilbert(disk, {0.0, 0.0}, {0.5, 0.0});
    h.check(std::fabs(fixed - 0.5 * std::log(3.0)) <= 1e-12, "axis pair vs half log 3");
  } catch (const Error& e) {
    h.fail(std::string("fixed pair: ") + e.what());
  }

  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t dim = 1 + i % 8;
    try {
      ConvexBody ball = ConvexBody::ball(Vector(dim, 0.0), 1.0);
      std::vector<Vector> pts =
          sample_interior(ball, seed ^ (0xBA11 + 0x9E37 * i), 2);
      const double direct = hilbert(ball, pts[0], pts[1]);
      const double oracle = hilbert_cross_ratio_oracle(ball, pts[0], pts[1]);
      std::ostringstream ss;
      ss << "pair " << i << " dim " << dim << ": direct " << direct << " oracle " << oracle;
      h.check(std::fabs(direct - oracle) <= 1e-9, ss.str());
    } catch (const Error& e) {
      h.fail("pair " + std::to_string(i) + ": " + e.what());
    }
  }
  return h.finish();
}

SuiteResult suite_domination_chain(std::uint64_t seed, std::size_t instances) {
  Harness h("domination-chain");
  for (std::size_t i = 0; i < instances; ++i) {
    const BodyKind kind = kKinds[i % 3];
    const std::size_t dim = 1 + (i / 3) % 8;
    try {
      Instance inst = make_instance(i, seed);
      const double gap = inst.M - inst.m;
      const ExtReal t = tau(inst.body, inst.x, inst.y);
      const double T = thompson(inst.body, inst.x, inst.y);
      const double H = hilbert(inst.body, inst.x, inst.y);
      const double tau_term = t.is_inf() ? 0.0 : gap / t.value();
      const double thom_term = gap * -std::expm1(-T);
      const double hil_term = gap * -std::expm1(-2.0 * H);
      h.check(tau_term <= thom_term + 1e-12, describe(i, dim, kind, "tau vs thompson"));
      h.check(thom_term <= gap * T + 1e-12,
              describe(i, dim, kind, "thompson form vs thompson lipschitz"));
      h.check(hil_term <= 2.0 * gap * H + 1e-12,
              describe(i, dim, kind, "hilbert form vs hilbert lipschitz"));
    } catch (const Error& e) {
      h.fail(describe(i, dim, kind, e.what()));
    }
  }
  return h.finish();
}

SuiteResult suite_gauge(std::uint64_t seed, std::size_t instances) {
  Harness h("gauge");
  for (std::size_t i = 0; i < instances; ++i) {
    const BodyKind kind = kKinds[i % 3];
    const std::size_t dim = 1 + (i / 3) % 8;
    try {
      Instance inst = make_instance(i, seed);
      GaugeFn g = make_gauge_fn(inst.body, inst.x);
      const ExtReal t = tau(inst.body, inst.x, inst.y);
      if (t.is_finite())
        h.check(std::fabs(gauge_value(g, inst.y) * t.value() - 1.0) <= 1e-9,
                describe(i, dim, kind, "gauge times tau"));
      else
        h.check(gauge_value(g, inst.y) == 0.0,
                describe(i, dim, kind, "gauge on the infinite branch"));

      PiecewiseAffineConvexFn fn = random_convex_fn(
          covering_vertices(inst.body), inst.m, inst.M, 2 + i % 5, seed ^ (0x6A6 + i));
      Vector zeta;
      try {
        zeta = subgradient_of_max_affine(fn, inst.x);
      } catch (const ClampedPointError&) {
        zeta = Vector(dim, 0.0);  // the floor is active; 0 is a subgradient
      }
      h.check(max_subdiff_contains(inst.body, inst.x, zeta, inst.m, inst.M),
              describe(i, dim, kind, "subgradient outside the maximal subdifferential"));
    } catch (const Error& e) {
      h.fail(describe(i, dim, kind, e.what()));
    }
  }

  /* Square body, unit range: the halfspace description must be the diamond
   * |w1| + |w2| <= 1. */
  try {
    VPolytope square{{{1.0, 1.0}, {1.0, -1.0}, {-1.0, 1.0}, {-1.0, -1.0}}};
    ConvexBody polar = max_subdiff_hrep(square, {0.0, 0.0}, 0.0, 1.0);
    const Vector probes[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0},
                             {0.5, 0.5}, {-0.5, 0.5}};
    for (const Vector& p : probes)
      h.check(contains(polar, p, 1e-12), "diamond vertex/edge point rejected");
    const Vector outside[] = {{1.0 + 1e-9, 0.0}, {0.5 + 1e-9, 0.5}, {0.0, -1.0 - 1e-9}};
    for (const Vector& p : outside)
      h.check(!contains(polar, p, 1e-13), "point beyond the diamond accepted");
    ConvexBody square_body = ConvexBody::vpolytope(square.vertices);
    Rng rng(seed, 0xD1A);
    for (int k = 0; k < 100; ++k) {
      Vector w{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
      const bool via_hrep = contains(polar, w, 1e-12);
      const bool via_support = max_subdiff_contains(square_body, {0.0, 0.0}, w, 0.0, 1.0, 1e-12);
      h.check(via_hrep == via_support, "halfspace description disagrees with support test");
    }
  } catch (const Error& e) {
    h.fail(std::string("square/diamond fixture: ") + e.what());
  }
  return h.finish();
}

SuiteResult suite_oracle_equivalence(std::uint64_t seed, std::size_t per_rep) {
  Harness h("oracle-equivalence");
  for (BodyKind kind : kKinds) {
    for (std::size_t i = 0; i < per_rep; ++i) {
      const std::size_t dim = 1 + i % 8;
      try {
        Rng rng = Rng(seed).split(0x07AC1E ^ (static_cast<int>(kind) * 1000003 + i));
        ConvexBody body = random_body(dim, kind, rng.next_u64());
        std::vector<Vector> pts = sample_interior(body, rng.next_u64(), 2);
        const ExtReal exact = tau(body, pts[0], pts[1]);
        const ExtReal probed = tau_bisection_oracle(body, pts[0], pts[1], 1e-8);
        if (exact.is_inf() || probed.is_inf()) {
          h.check(exact.is_inf() == probed.is_inf(),
                  describe(i, dim, kind, "finite/infinite disagreement"));
          continue;
        }
        const double rel = std::fabs(exact.value() - probed.value()) /
                           std::max(1.0, std::fabs(exact.value()));
        h.check(rel <= 1e-6, describe(i, dim, kind, "closed form vs bisection"));
      } catch (const Error& e) {
        h.fail(describe(i, dim, kind, e.what()));
      }
    }
  }
  return h.finish();
}

SuiteResult suite_metric_axioms(std::uint64_t seed, std::size_t triples) {
  Harness h("metric-axioms");
  for (BodyKind kind : kKinds) {
    for (std::size_t i = 0; i < triples; ++i) {
      const std::size_t dim = 1 + i % 8;
      try {
        Rng rng = Rng(seed).split(0xA1075 ^ (static_cast<int>(kind) * 1000003 + i));
        ConvexBody body = random_body(dim, kind, rng.next_u64());
        std::vector<Vector> pts = sample_interior(body, rng.next_u64(), 3);
        const Vector &x = pts[0], &y = pts[1], &z = pts[2];
        h.check(funk(body, x, z) <= funk(body, x, y) + funk(body, y, z) + 1e-9,
                describe(i, dim, kind, "funk triangle inequality"));
        h.check(funk(body, x, x) == 0.0, describe(i, dim, kind, "funk self-distance"));
        h.check(thompson(body, x, y) == thompson(body, y, x),
                describe(i, dim, kind, "thompson symmetry"));
        h.check(hilbert(body, x, y) == hilbert(body, y, x),
                describe(i, dim, kind, "hilbert symmetry"));
        const double T = thompson(body, x, y);
        const double H = hilbert(body, x, y);
        h.check(H <= T + 1e-12 && T <= 2.0 * H + 1e-12,
                describe(i, dim, kind, "hilbert/thompson sandwich"));
      } catch (const Error& e) {
        h.fail(describe(i, dim, kind, e.what()));
      }
    }
  }
  return h.finish();
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
  return {suite_bound_soundness(seed),    suite_attainment(seed),
          suite_funk_identity(seed),      suite_ball_ground_truth(seed),
          suite_domination_chain(seed),   suite_gauge(seed),
          suite_oracle_equivalence(seed), suite_metric_axioms(seed)};
}

bool run_selftest(std::ostream& out, std::uint64_t seed) {
  bool all = true;
  for (const SuiteResult& r : run_all_suites(seed)) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.checked
        << " checks, " << r.failed << " failed, " << r.seconds << " s)";
    if (!r.pass && !r.detail.empty()) out << "  first: " << r.detail;
    out << '\n';
    all = all && r.pass;
  }
  return all;
}

}  // namespace cvxmetric
