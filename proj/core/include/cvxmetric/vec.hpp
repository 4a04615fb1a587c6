#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cvxmetric {

using Vector = std::vector<double>;

double dot(const Vector& a, const Vector& b);
double norm(const Vector& a);
double distance(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& a, double s);
/* a + s * (b - a) */
Vector lerp(const Vector& a, const Vector& b, double s);
bool all_finite(const Vector& a);
bool is_zero(const Vector& a);

/* Dense row-major matrix. */
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  Vector row(std::size_t r) const;

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_rows(const std::vector<Vector>& rows);
};

Vector matvec(const Matrix& m, const Vector& x);

}  // namespace cvxmetric
