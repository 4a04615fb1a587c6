#pragma once

#include <cmath>

#include "cvxmetric/errors.hpp"

namespace cvxmetric {

/* A finite real or +infinity. The infinite state is an explicit tag, never a
 * floating +inf, so arithmetic on the finite payload cannot absorb it
 * silently: value() on the infinite state throws. */
class ExtReal {
 public:
  static ExtReal finite(double v) {
    if (!std::isfinite(v)) throw Error("ExtReal::finite requires a finite value");
    return ExtReal(v, true);
  }
  static ExtReal pos_inf() { return ExtReal(0.0, false); }

  bool is_finite() const { return finite_; }
  bool is_inf() const { return !finite_; }

  double value() const {
    if (!finite_) throw Error("ExtReal::value called on +inf");
    return v_;
  }
  double value_or(double fallback) const { return finite_ ? v_ : fallback; }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }

 private:
  ExtReal(double v, bool finite) : v_(v), finite_(finite) {}

  double v_;
  bool finite_;
};

}  // namespace cvxmetric
