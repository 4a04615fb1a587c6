#pragma once

#include <optional>

#include "cvxmetric/ext_real.hpp"
#include "cvxmetric/vec.hpp"

namespace cvxmetric {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  ExtReal value = ExtReal::finite(0.0);  // optimum when Optimal, +inf when Unbounded
  std::optional<Vector> argmax;          // present exactly when Optimal
};

/* maximize c.x  subject to  a x <= b,  x free.
 * Dense two-phase simplex with Bland's rule; throws PivotLimitError past
 * 10 * (rows + cols) pivots. */
LpResult lp_maximize(const Vector& c, const Matrix& a, const Vector& b);

/* Same, with x >= 0 kept implicit instead of encoded as rows. */
LpResult lp_maximize_nonneg(const Vector& c, const Matrix& a, const Vector& b);

}  // namespace cvxmetric
