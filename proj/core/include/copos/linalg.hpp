#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "copos/rational.hpp"

namespace copos {

/// Dense row-major rational matrix used for exact elimination.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

  std::size_t rows() const { return m_rows; }
  std::size_t cols() const { return m_cols; }

  Rational& operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t m_rows = 0;
  std::size_t m_cols = 0;
  std::vector<Rational> m_data;
};

/// Outcome of Gauss-Jordan elimination on [A | b].
struct Elimination {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  bool consistent = false;
  // Solution with every free (non-pivot) variable set to zero; empty when
  // the system is inconsistent.
  RationalVector solution;
  // det(A) for square A, zero when singular. Unset for rectangular A.
  std::optional<Rational> determinant;
};

/// Exact Gauss-Jordan elimination. The pivot in each column is the first
/// row (from the current one downward) with a nonzero entry.
Elimination eliminate(RationalMatrix a, RationalVector b);

Rational determinant(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);

/// A nonzero vector z with A z = 0, or nullopt when the columns of A are
/// linearly independent.
std::optional<RationalVector> kernel_vector(const RationalMatrix& a);

}  // namespace copos
