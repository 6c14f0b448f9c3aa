#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "copos/rational.hpp"

namespace copos {

/// Symmetric n x n integer matrix. Only the upper triangle (i <= j) is
/// stored, row by row; reading (j, i) returns the stored (i, j) entry.
/// Values are fixed at construction.
class SymmetricIntMatrix {
 public:
  /// n x n zero matrix. Throws DomainError for n == 0.
  explicit SymmetricIntMatrix(std::size_t n);

  /// From the n(n+1)/2 upper-triangular entries listed row by row.
  static SymmetricIntMatrix from_upper(std::size_t n, std::vector<Integer> upper);

  /// From a full square array. Non-symmetric input is rejected with a
  /// DomainError, never symmetrized.
  static SymmetricIntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t dim() const { return m_n; }

  const Integer& operator()(std::size_t i, std::size_t j) const;

  std::span<const Integer> upper() const { return m_upper; }

  bool is_zero() const;

  friend bool operator==(const SymmetricIntMatrix& a, const SymmetricIntMatrix& b) {
    return a.m_n == b.m_n && a.m_upper == b.m_upper;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t m_n;
  std::vector<Integer> m_upper;
};

/// M x, exact.
RationalVector multiply(const SymmetricIntMatrix& m, std::span<const Rational> x);

/// x^T M x, exact. Throws DimensionMismatch when x.size() != n.
Rational quadratic_form(const SymmetricIntMatrix& m, std::span<const Rational> x);

}  // namespace copos
