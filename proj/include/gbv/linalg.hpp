#pragma once

#include <optional>
#include <vector>

#include "gbv/rational.hpp"

namespace gbv {

// Dense rational matrix, row major. Sizes here are tiny (hundreds at most),
// so plain Gauss-Jordan with exact arithmetic is all we need.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}

  Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static QMatrix identity(int n);

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const Rational& c) const;
  bool operator==(const QMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool is_zero() const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  QMatrix column(int j) const;
};

struct Echelon {
  QMatrix rref;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Deterministic reduction: columns left to right, pivot in the first row
// (smallest index) with a nonzero entry at or below the current one.
Echelon reduced_row_echelon(QMatrix m);

int rank(const QMatrix& m);

// Columns form a basis of the null space, one per free column in ascending
// column order, each with a 1 in its free coordinate.
QMatrix kernel_basis(const QMatrix& m);

// The pivot columns of m itself, in ascending pivot order.
QMatrix image_basis(const QMatrix& m);

// One solution of m x = b if the system is consistent.
std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& b);

// Characteristic polynomial of a square matrix by the Faddeev-LeVerrier
// recurrence, monic, coefficients returned ascending (c[0] + c[1] t + ...).
std::vector<Rational> char_poly(const QMatrix& m);

// All rational roots of a nonzero polynomial with rational coefficients
// (ascending), found by divisor search on the integer-cleared form. Each root
// appears once. Throws std::domain_error when a coefficient is too large to
// factor by trial division.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

// Divides out (t - root); the division must be exact.
std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& root);

}  // namespace gbv
