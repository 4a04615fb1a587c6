#pragma once

#include "cvxmetric/body.hpp"
#include "cvxmetric/geometry.hpp"

namespace cvxmetric {

enum class Orientation { Upper, Lower };

/* Convex function on the body attaining the variation bound for its anchor
 * pair: f(y) - f(x) equals (M - m)/tau(x, y) for Upper, -(M - m)/tau(y, x)
 * for Lower. Constant m on the infinite branch and when m == M. */
class ExtremalFn {
 public:
  const ConvexBody& body() const { return body_; }
  const Vector& x() const { return x_; }
  const Vector& y() const { return y_; }
  const Vector& direction() const { return u_; }  // tau-scaled chord direction
  double m() const { return m_; }
  double M() const { return M_; }
  Orientation orientation() const { return orientation_; }
  bool constant() const { return constant_; }
  ExtReal anchor_tau() const { return tau_; }
  double margin() const { return margin_; }

 private:
  friend ExtremalFn build_extremal(const ConvexBody&, const Vector&, const Vector&, double,
                                   double, Orientation);
  ExtremalFn(ConvexBody body, Vector x, Vector y, Vector u, double m, double M,
             Orientation orientation, bool constant, ExtReal tau_value, double margin)
      : body_(std::move(body)), x_(std::move(x)), y_(std::move(y)), u_(std::move(u)),
        m_(m), M_(M), orientation_(orientation), constant_(constant), tau_(tau_value),
        margin_(margin) {}

  ConvexBody body_;
  Vector x_, y_, u_;
  double m_, M_;
  Orientation orientation_;
  bool constant_;
  ExtReal tau_;
  double margin_;
};

/* sup { t >= 0 : z + t u in body }; concave in z for fixed u. */
ExtReal sigma(const ConvexBody& body, const Vector& z, const Vector& u);

ExtremalFn build_extremal(const ConvexBody& body, const Vector& x, const Vector& y,
                          double m, double M, Orientation orientation);

double eval_extremal(const ExtremalFn& fn, const Vector& z);

struct AttainmentResult {
  bool upper_attained = false;
  bool lower_attained = false;
  double upper_gap = 0.0;  // |achieved - target|
  double lower_gap = 0.0;
};

AttainmentResult attainment_check(const ConvexBody& body, const Vector& x, const Vector& y,
                                  double m, double M, double tol = 1e-9);

}  // namespace cvxmetric
