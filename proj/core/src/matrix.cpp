#include "copos/matrix.hpp"

#include <string>

#include "copos/error.hpp"

namespace copos {

SymmetricIntMatrix::SymmetricIntMatrix(std::size_t n) : m_n(n), m_upper(n * (n + 1) / 2) {
  if (n == 0) throw DomainError("matrix dimension must be at least 1");
}

SymmetricIntMatrix SymmetricIntMatrix::from_upper(std::size_t n, std::vector<Integer> upper) {
  SymmetricIntMatrix m(n);
  if (upper.size() != m.m_upper.size())
    throw DimensionMismatch("expected " + std::to_string(m.m_upper.size()) + " upper-triangular entries, got " +
                            std::to_string(upper.size()));
  m.m_upper = std::move(upper);
  return m;
}

SymmetricIntMatrix SymmetricIntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t n = rows.size();
  SymmetricIntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DimensionMismatch("row " + std::to_string(i) + " has wrong length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i])
        throw DomainError("matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      m.m_upper[m.index(i, j)] = rows[i][j];
    }
  }
  return m;
}

std::size_t SymmetricIntMatrix::index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  // rows 0..i-1 hold n + (n-1) + ... + (n-i+1) entries
  return i * m_n - i * (i - 1) / 2 + (j - i);
}

const Integer& SymmetricIntMatrix::operator()(std::size_t i, std::size_t j) const {
  return m_upper[index(i, j)];
}

bool SymmetricIntMatrix::is_zero() const {
  for (const auto& e : m_upper)
    if (e != 0) return false;
  return true;
}

RationalVector multiply(const SymmetricIntMatrix& m, std::span<const Rational> x) {
  const std::size_t n = m.dim();
  if (x.size() != n) throw DimensionMismatch("matrix-vector product: length mismatch");
  RationalVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != 0 && sgn(x[j]) != 0) acc += Rational(m(i, j)) * x[j];
    }
    out[i] = acc;
  }
  return out;
}

Rational quadratic_form(const SymmetricIntMatrix& m, std::span<const Rational> x) {
  if (x.size() != m.dim()) throw DimensionMismatch("quadratic form: vector length differs from dimension");
  const RationalVector mx = multiply(m, x);
  return dot(x, mx);
}

}  // namespace copos
