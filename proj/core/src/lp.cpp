#include "cvxmetric/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cvxmetric/errors.hpp"

namespace cvxmetric {
namespace {

constexpr double kPivotTol = 1e-10;

/* Constraint rows of a dense tableau plus the basis map. Objective rows are
 * carried separately and updated by the same eliminations. */
struct Tableau {
  std::size_t m = 0;
  std::size_t width = 0;  // columns including the rhs
  std::vector<double> cells;
  std::vector<std::size_t> basis;

  double& at(std::size_t r, std::size_t c) { return cells[r * width + c]; }
  double at(std::size_t r, std::size_t c) const { return cells[r * width + c]; }
};

/* Objective-row convention: z[j] is the reduced cost of column j (rate of
 * objective increase per unit of the nonbasic variable), z[width-1] is minus
 * the current objective value. */
void pivot(Tableau& t, std::vector<double>& z1, std::vector<double>& z2, std::size_t row,
           std::size_t col) {
  double* prow = &t.cells[row * t.width];
  const double inv = 1.0 / prow[col];
  for (std::size_t j = 0; j < t.width; ++j) prow[j] *= inv;
  prow[col] = 1.0;
  for (std::size_t i = 0; i < t.m; ++i) {
    if (i == row) continue;
    double* irow = &t.cells[i * t.width];
    const double f = irow[col];
    if (f == 0.0) continue;
    for (std::size_t j = 0; j < t.width; ++j) irow[j] -= f * prow[j];
    irow[col] = 0.0;
  }
  for (std::vector<double>* z : {&z1, &z2}) {
    if (z->empty()) continue;
    const double f = (*z)[col];
    if (f == 0.0) continue;
    for (std::size_t j = 0; j < t.width; ++j) (*z)[j] -= f * prow[j];
    (*z)[col] = 0.0;
  }
  t.basis[row] = col;
}

/* Simplex iterations driven by objective row z. Entering column: smallest
 * improving index (Bland); leaving row: min ratio, ties to the smallest basic
 * index. Returns false when the entering column has no positive entry. */
bool iterate(Tableau& t, std::vector<double>& z, std::vector<double>& zaux,
             std::size_t enterable_cols, std::size_t& pivots, std::size_t max_pivots) {
  const std::size_t rhs = t.width - 1;
  for (;;) {
    std::size_t enter = rhs;
    for (std::size_t j = 0; j < enterable_cols; ++j) {
      if (z[j] > kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter == rhs) return true;

    std::size_t leave = t.m;
    double best = 0.0;
    for (std::size_t i = 0; i < t.m; ++i) {
      const double a = t.at(i, enter);
      if (a <= kPivotTol) continue;
      const double ratio = t.at(i, rhs) / a;
      if (leave == t.m) {
        best = ratio;
        leave = i;
        continue;
      }
      const double slack = 1e-12 * (1.0 + std::abs(best));
      if (ratio < best - slack) {
        best = ratio;
        leave = i;
      } else if (ratio <= best + slack && t.basis[i] < t.basis[leave]) {
        leave = i;
      }
    }
    if (leave == t.m) return false;
    if (++pivots > max_pivots) throw PivotLimitError("simplex: pivot limit exceeded");
    pivot(t, z, zaux, leave, enter);
  }
}

}  // namespace

LpResult lp_maximize_nonneg(const Vector& c, const Matrix& a, const Vector& b) {
  const std::size_t n = c.size();
  const std::size_t m = a.rows;
  if ((m > 0 && a.cols != n) || b.size() != m)
    throw DimensionError("lp_maximize: shape mismatch");

  double bscale = 1.0;
  for (double v : b) bscale = std::max(bscale, std::abs(v));

  std::size_t n_art = 0;
  for (double v : b)
    if (v < 0.0) ++n_art;

  Tableau t;
  t.m = m;
  t.width = n + m + n_art + 1;
  t.cells.assign(m * t.width, 0.0);
  t.basis.assign(m, 0);
  const std::size_t rhs = t.width - 1;
  const std::size_t structural = n + m;  // x columns then slacks

  std::size_t art = structural;
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = b[i] >= 0.0 ? 1.0 : -1.0;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign * a.at(i, j);
    t.at(i, n + i) = sign;
    t.at(i, rhs) = sign * b[i];
    if (b[i] >= 0.0) {
      t.basis[i] = n + i;
    } else {
      t.at(i, art) = 1.0;
      t.basis[i] = art++;
    }
  }

  std::vector<double> z2(t.width, 0.0);
  for (std::size_t j = 0; j < n; ++j) z2[j] = c[j];

  std::size_t pivots = 0;
  const std::size_t max_pivots = std::max<std::size_t>(200, 10 * (m + t.width));

  std::vector<double> z1;
  if (n_art > 0) {
    z1.assign(t.width, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < structural) continue;
      for (std::size_t j = 0; j < t.width; ++j) z1[j] += t.at(i, j);
    }
    for (std::size_t k = structural; k < structural + n_art; ++k) z1[k] = 0.0;

    iterate(t, z1, z2, t.width - 1, pivots, max_pivots);
    if (z1[rhs] > 1e-10 * bscale) return LpResult{LpStatus::Infeasible, ExtReal::finite(0.0), {}};

    // Drive zero-valued artificials out of the basis where a structural
    // column permits; leftover rows are redundant and harmless.
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < structural) continue;
      for (std::size_t j = 0; j < structural; ++j) {
        if (std::abs(t.at(i, j)) > kPivotTol) {
          pivot(t, z1, z2, i, j);
          break;
        }
      }
    }
  }

  if (!iterate(t, z2, z1, structural, pivots, max_pivots))
    return LpResult{LpStatus::Unbounded, ExtReal::pos_inf(), {}};

  Vector x(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] < n) x[t.basis[i]] = t.at(i, rhs);
  return LpResult{LpStatus::Optimal, ExtReal::finite(dot(c, x)), std::move(x)};
}

LpResult lp_maximize(const Vector& c, const Matrix& a, const Vector& b) {
  const std::size_t n = c.size();
  if ((a.rows > 0 && a.cols != n) || b.size() != a.rows)
    throw DimensionError("lp_maximize: shape mismatch");

  // x = u - w with u, w >= 0.
  Vector c2(2 * n);
  Matrix a2(a.rows, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    c2[j] = c[j];
    c2[n + j] = -c[j];
  }
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a2.at(i, j) = a.at(i, j);
      a2.at(i, n + j) = -a.at(i, j);
    }

  LpResult r = lp_maximize_nonneg(c2, a2, b);
  if (r.status != LpStatus::Optimal) return r;
  Vector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = (*r.argmax)[j] - (*r.argmax)[n + j];
  return LpResult{LpStatus::Optimal, ExtReal::finite(dot(c, x)), std::move(x)};
}

}  // namespace cvxmetric
