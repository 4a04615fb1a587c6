#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cvxmetric/ext_real.hpp"
#include "cvxmetric/vec.hpp"

namespace cvxmetric {

/* { x : a x <= b }, row normals nonzero. */
struct HPolytope {
  Matrix a;
  Vector b;
};

/* conv(vertices), at least one vertex. */
struct VPolytope {
  std::vector<Vector> vertices;
};

struct Ball {
  Vector center;
  double radius = 1.0;
};

enum class BodyKind { HPolytope, VPolytope, Ball };

/* Immutable convex body in R^n, n in [1, 16]. */
class ConvexBody {
 public:
  static ConvexBody hpolytope(Matrix a, Vector b);
  static ConvexBody vpolytope(std::vector<Vector> vertices);
  static ConvexBody ball(Vector center, double radius);

  std::size_t dim() const { return dim_; }
  BodyKind kind() const;
  const HPolytope* as_hpolytope() const { return std::get_if<HPolytope>(&rep_); }
  const VPolytope* as_vpolytope() const { return std::get_if<VPolytope>(&rep_); }
  const Ball* as_ball() const { return std::get_if<Ball>(&rep_); }

 private:
  ConvexBody(std::variant<HPolytope, VPolytope, Ball> rep, std::size_t dim)
      : rep_(std::move(rep)), dim_(dim) {}

  std::variant<HPolytope, VPolytope, Ball> rep_;
  std::size_t dim_;
};

inline constexpr std::size_t kMaxDim = 16;

/* Closure membership within tol >= 0. V-polytope membership is an LP
 * feasibility question; the other representations are closed-form. */
bool contains(const ConvexBody& body, const Vector& p, double tol);

struct BoundingBox {
  Vector lo, hi;  // valid entries only where bounded
  bool bounded = true;
};
BoundingBox bounding_box(const ConvexBody& body);

/* Length scale for relative tolerances: the diameter (bounding-box diagonal
 * for H-polytopes) when finite and nonzero, else 1. */
double body_scale(const ConvexBody& body);

/* Largest t with p expressible as sum lambda_i v_i, sum lambda_i = 1,
 * lambda_i >= t for all i. Positive iff p is in the relative interior;
 * crosses zero exactly on the boundary. Empty if p is outside the affine
 * hull of the vertices. */
std::optional<double> min_weight(const VPolytope& vp, const Vector& p);

}  // namespace cvxmetric
