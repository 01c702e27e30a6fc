#include "socle/linalg.hpp"

#include <gmpxx.h>

#include "socle/errors.hpp"

namespace socle {

namespace {

/// Scale a row to integer entries with content 1 (rationals only); keeps
/// intermediate numbers small during elimination.
void normalize_row(Matrix& m, std::size_t i) {
  if (!m.field.is_rationals()) return;
  mpz_class den(1), num(0);
  for (std::size_t j = 0; j < m.cols; ++j) {
    const Scalar& s = m.at(i, j);
    if (s.is_zero()) continue;
    mpz_class d = s.rat().get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  for (std::size_t j = 0; j < m.cols; ++j) {
    const Scalar& s = m.at(i, j);
    if (s.is_zero()) continue;
    mpq_class v = s.rat() * mpq_class(den);
    mpz_class n = v.get_num();
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
  }
  if (num == 0) return;
  Scalar factor = Scalar::of_fraction(m.field, den, num);
  for (std::size_t j = 0; j < m.cols; ++j)
    if (!m.at(i, j).is_zero()) m.at(i, j) = m.at(i, j) * factor;
}

/// In place forward elimination; returns the pivot column of each pivot row.
/// With reduce set, clears above the pivots and scales them to 1 (rref).
std::vector<std::size_t> echelon(Matrix& m, bool reduce) {
  for (std::size_t i = 0; i < m.rows; ++i) normalize_row(m, i);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(r, j);
      normalize_row(m, i);
    }
    pivots.push_back(c);
    ++r;
  }
  if (reduce) {
    for (std::size_t k = pivots.size(); k-- > 0;) {
      std::size_t c = pivots[k];
      for (std::size_t i = 0; i < k; ++i) {
        if (m.at(i, c).is_zero()) continue;
        Scalar f = m.at(i, c);
        for (std::size_t j = c; j < m.cols; ++j)
          m.at(i, j) = m.at(i, j) - f * m.at(k, j);
      }
    }
  }
  return pivots;
}

}  // namespace

Matrix Matrix::zero(const Field& f, std::size_t rows, std::size_t cols) {
  Matrix m;
  m.field = f;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(rows * cols, Scalar::zero(f));
  return m;
}

Matrix Matrix::times(const Matrix& o) const {
  if (cols != o.rows || !(field == o.field))
    fail(ErrorCode::ring_mismatch, "matrix product shape mismatch");
  Matrix r = zero(field, rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const Scalar& v = at(i, k);
      if (v.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols; ++j)
        r.at(i, j) = r.at(i, j) + v * o.at(k, j);
    }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!(field == o.field) || rows != o.rows || cols != o.cols) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

std::string Matrix::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows; ++i) {
    s += "[";
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) s += ", ";
      s += at(i, j).str();
    }
    s += "]\n";
  }
  return s;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols != bottom.cols || !(top.field == bottom.field))
    fail(ErrorCode::ring_mismatch, "vstack column mismatch");
  Matrix m = Matrix::zero(top.field, top.rows + bottom.rows, top.cols);
  for (std::size_t i = 0; i < top.rows; ++i)
    for (std::size_t j = 0; j < top.cols; ++j) m.at(i, j) = top.at(i, j);
  for (std::size_t i = 0; i < bottom.rows; ++i)
    for (std::size_t j = 0; j < top.cols; ++j)
      m.at(top.rows + i, j) = bottom.at(i, j);
  return m;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows != right.rows || !(left.field == right.field))
    fail(ErrorCode::ring_mismatch, "hstack row mismatch");
  Matrix m = Matrix::zero(left.field, left.rows, left.cols + right.cols);
  for (std::size_t i = 0; i < left.rows; ++i) {
    for (std::size_t j = 0; j < left.cols; ++j) m.at(i, j) = left.at(i, j);
    for (std::size_t j = 0; j < right.cols; ++j)
      m.at(i, left.cols + j) = right.at(i, j);
  }
  return m;
}

std::size_t rank(Matrix m) { return echelon(m, false).size(); }

Matrix rref(Matrix m) {
  echelon(m, true);
  return m;
}

Matrix nullspace(const Matrix& m) {
  Matrix e = m;
  std::vector<std::size_t> pivots = echelon(e, true);
  std::vector<std::uint8_t> is_pivot(m.cols, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::size_t nfree = m.cols - pivots.size();
  Matrix ns = Matrix::zero(m.field, m.cols, nfree);
  std::size_t k = 0;
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    ns.at(j, k) = Scalar::one(m.field);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      ns.at(pivots[r], k) = -e.at(r, j);
    ++k;
  }
  return ns;
}

Matrix column_basis(const Matrix& m) {
  Matrix e = m;
  std::vector<std::size_t> pivots = echelon(e, false);
  Matrix b = Matrix::zero(m.field, m.rows, pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows; ++i) b.at(i, k) = m.at(i, pivots[k]);
  return b;
}

}  // namespace socle
