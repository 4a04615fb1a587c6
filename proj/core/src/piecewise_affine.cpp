#include "cvxmetric/piecewise_affine.hpp"

#include <cmath>

#include "cvxmetric/errors.hpp"

namespace cvxmetric {

PiecewiseAffineConvexFn::PiecewiseAffineConvexFn(std::vector<AffinePiece> pieces, double m,
                                                 double M, double scale, double h_max)
    : pieces_(std::move(pieces)), m_(m), M_(M), scale_(scale), h_max_(h_max) {
  if (pieces_.empty()) throw Error("piecewise affine fn: at least one piece required");
  const std::size_t n = pieces_.front().gradient.size();
  for (const AffinePiece& p : pieces_) {
    if (p.gradient.size() != n) throw DimensionError("piecewise affine fn: ragged pieces");
    if (!all_finite(p.gradient) || !std::isfinite(p.offset))
      throw Error("piecewise affine fn: non-finite piece");
  }
  if (!(m <= M)) throw Error("piecewise affine fn: requires m <= M");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw Error("piecewise affine fn: scale must be positive");
  if (!std::isfinite(h_max)) throw Error("piecewise affine fn: non-finite h_max");
}

double PiecewiseAffineConvexFn::h(const Vector& z) const {
  double best = dot(pieces_.front().gradient, z) + pieces_.front().offset;
  for (std::size_t i = 1; i < pieces_.size(); ++i)
    best = std::max(best, dot(pieces_[i].gradient, z) + pieces_[i].offset);
  return best;
}

std::size_t PiecewiseAffineConvexFn::active_piece(const Vector& z) const {
  std::size_t best_i = 0;
  double best = dot(pieces_.front().gradient, z) + pieces_.front().offset;
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    const double v = dot(pieces_[i].gradient, z) + pieces_[i].offset;
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  return best_i;
}

double PiecewiseAffineConvexFn::operator()(const Vector& z) const {
  return std::max(m_, M_ - scale_ * (h_max_ - h(z)));
}

}  // namespace cvxmetric
