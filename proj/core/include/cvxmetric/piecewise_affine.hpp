#pragma once

#include <cstddef>
#include <vector>

#include "cvxmetric/vec.hpp"

namespace cvxmetric {

struct AffinePiece {
  Vector gradient;
  double offset = 0.0;
};

/* f(z) = max(m, M - scale * (h_max - h(z))) with h the max of the affine
 * pieces and h_max its exact maximum over the intended body. Convex, and
 * maps the body into [m, M] whenever h <= h_max there. */
class PiecewiseAffineConvexFn {
 public:
  PiecewiseAffineConvexFn(std::vector<AffinePiece> pieces, double m, double M,
                          double scale, double h_max);

  double operator()(const Vector& z) const;
  double h(const Vector& z) const;
  /* Lowest index attaining the max of the pieces at z. */
  std::size_t active_piece(const Vector& z) const;

  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  double m() const { return m_; }
  double M() const { return M_; }
  double scale() const { return scale_; }
  double h_max() const { return h_max_; }
  std::size_t dim() const { return pieces_.front().gradient.size(); }

 private:
  std::vector<AffinePiece> pieces_;
  double m_, M_, scale_, h_max_;
};

}  // namespace cvxmetric
