#include "copos/linalg.hpp"

#include "copos/error.hpp"

namespace copos {

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m_cols; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

namespace {

// Gauss-Jordan to reduced row echelon form. Applies the same row operations
// to rhs and accumulates the determinant of the leading square block.
std::vector<std::size_t> reduce(RationalMatrix& a, RationalVector& rhs, Rational& det) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  det = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      a.swap_rows(pivot, row);
      std::swap(rhs[pivot], rhs[row]);
      det = -det;
    }
    const Rational p = a(row, col);
    det *= p;
    for (std::size_t j = col; j < cols; ++j) a(row, j) /= p;
    rhs[row] /= p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = col; j < cols; ++j) {
        if (sgn(a(row, j)) != 0) a(r, j) -= f * a(row, j);
      }
      rhs[r] -= f * rhs[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Elimination eliminate(RationalMatrix a, RationalVector b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (b.size() != rows) throw DimensionMismatch("eliminate: right-hand side length mismatch");

  Elimination out;
  Rational det;
  out.pivot_columns = reduce(a, b, det);
  out.rank = out.pivot_columns.size();

  out.consistent = true;
  for (std::size_t r = out.rank; r < rows; ++r) {
    if (sgn(b[r]) != 0) {
      out.consistent = false;
      break;
    }
  }
  if (out.consistent) {
    out.solution = zeros(cols);
    for (std::size_t k = 0; k < out.rank; ++k) out.solution[out.pivot_columns[k]] = b[k];
  }
  if (rows == cols) out.determinant = out.rank == rows ? det : Rational(0);
  return out;
}

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  return *eliminate(a, zeros(a.rows())).determinant;
}

std::size_t rank(const RationalMatrix& a) { return eliminate(a, zeros(a.rows())).rank; }

std::optional<RationalVector> kernel_vector(const RationalMatrix& a) {
  const std::size_t cols = a.cols();
  RationalMatrix r = a;
  RationalVector rhs = zeros(a.rows());
  Rational det;
  const std::vector<std::size_t> pivots = reduce(r, rhs, det);
  if (pivots.size() == cols) return std::nullopt;

  // First free column; its kernel vector has a 1 there and minus the reduced
  // column entries in the pivot positions.
  std::size_t free_col = 0;
  for (std::size_t k = 0; k < pivots.size() && pivots[k] == free_col; ++k) ++free_col;
  RationalVector z = zeros(cols);
  z[free_col] = 1;
  for (std::size_t k = 0; k < pivots.size(); ++k) z[pivots[k]] = -r(k, free_col);
  return z;
}

}  // namespace copos
