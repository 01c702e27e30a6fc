#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "socle/scalar.hpp"

namespace socle {

/// Dense matrix over the coefficient field, row major, exact arithmetic.
/// Sized for desk-scale problems; no sparsity, no pivot strategy beyond the
/// first nonzero entry.
struct Matrix {
  Field field;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> a;

  static Matrix zero(const Field& f, std::size_t rows, std::size_t cols);

  Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  Matrix times(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

  std::string str() const;
};

/// Stack top over bottom; column counts must agree.
Matrix vstack(const Matrix& top, const Matrix& bottom);
/// Place left beside right; row counts must agree.
Matrix hstack(const Matrix& left, const Matrix& right);

std::size_t rank(Matrix m);
/// Reduced row echelon form.
Matrix rref(Matrix m);
/// Columns spanning { x : m x = 0 }.
Matrix nullspace(const Matrix& m);
/// Columns forming a basis of the column span.
Matrix column_basis(const Matrix& m);

}  // namespace socle
