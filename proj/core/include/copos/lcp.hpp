#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "copos/encoding.hpp"
#include "copos/linalg.hpp"
#include "copos/matrix.hpp"
#include "copos/rational.hpp"

namespace copos {

inline constexpr std::size_t kDefaultLcpMaxN = 12;

/// The linear system A s = b in non-negative variables s = (x, y, u, v):
///
///   [ -M  -I   I   0 ] s = [ 0 ]
///   [  I   0   0   I ]     [ e ]
///
/// Row i reads u_i = (Mx)_i + y_i, row n+i reads x_i + v_i = 1.
struct LcpSystem {
  std::size_t n = 0;
  SymmetricIntMatrix matrix{1};
  std::vector<Integer> a;  // 2n x 4n, row-major
  std::vector<Integer> b;  // 2n

  std::size_t rows() const { return 2 * n; }
  std::size_t cols() const { return 4 * n; }
  const Integer& at(std::size_t row, std::size_t col) const { return a[row * cols() + col]; }

  // Column offsets of the four variable groups.
  std::size_t x_col(std::size_t i) const { return i; }
  std::size_t y_col(std::size_t i) const { return n + i; }
  std::size_t u_col(std::size_t i) const { return 2 * n + i; }
  std::size_t v_col(std::size_t i) const { return 3 * n + i; }

  /// Columns `cols` of A as a rational matrix.
  RationalMatrix submatrix(std::span<const std::size_t> cols) const;

  /// A s - b.
  RationalVector residual(std::span<const Rational> s) const;
};

/// A feasible point of the system satisfying x_i u_i = 0 and y_i v_i = 0.
struct ComplementarySolution {
  RationalVector s;                   // length 4n: (x, y, u, v)
  std::vector<std::size_t> support;   // sorted indices with s_j > 0
  std::optional<std::vector<std::size_t>> basis;  // 2n columns, when nonsingular
  std::optional<Integer> basis_det;
  std::optional<std::uint64_t> pattern;  // enumeration pattern that produced it

  std::size_t n() const { return s.size() / 4; }
  std::span<const Rational> x() const { return std::span(s).subspan(0, n()); }
  std::span<const Rational> y() const { return std::span(s).subspan(n(), n()); }
  std::span<const Rational> u() const { return std::span(s).subspan(2 * n(), n()); }
  std::span<const Rational> v() const { return std::span(s).subspan(3 * n(), n()); }
};

enum class MinimizationMethod { lcp_enumeration, oracle };

const char* to_string(MinimizationMethod method);

/// Exact minimum of x^T M x over [0,1]^n.
struct MinimizationResult {
  Rational gamma;
  RationalVector argmin;
  std::optional<ComplementarySolution> witness;  // present for lcp_enumeration
  MinimizationMethod method = MinimizationMethod::lcp_enumeration;
};

LcpSystem build_system(const SymmetricIntMatrix& m);

/// Support indices of s (coordinates strictly positive).
std::vector<std::size_t> support_of(std::span<const Rational> s);

/// Builds a ComplementarySolution from s, filling the support.
ComplementarySolution make_solution(RationalVector s);

/// Problems found when checking s against A s = b, s >= 0, the
/// complementarity conditions and x^T M x = -e^T y. Empty when s is valid.
std::vector<std::string> validate_solution(const LcpSystem& sys, std::span<const Rational> s);

/// One complementary column pattern: bit i selects x_i over u_i, bit n+i
/// selects y_i over v_i.
struct PatternOutcome {
  std::uint64_t pattern = 0;
  std::vector<std::size_t> columns;  // the 2n chosen columns, ascending
  Integer det;                       // det of the chosen columns (0 if singular)
  std::optional<RationalVector> s;   // full solution when the pattern system is consistent
};

/// Visits every one of the 4^n complementary patterns in ascending pattern
/// order. Throws LimitExceeded when n > max_n.
void for_each_complementary_pattern(const LcpSystem& sys,
                                    const std::function<void(const PatternOutcome&)>& visit,
                                    std::size_t max_n = kDefaultLcpMaxN);

/// All distinct complementary feasible solutions reachable from a
/// complementary pattern, in order of first discovery.
std::vector<ComplementarySolution> enumerate_complementary_solutions(const SymmetricIntMatrix& m,
                                                                      std::size_t max_n = kDefaultLcpMaxN);

/// Box minimum via complementary enumeration. Ties resolve to the
/// lexicographically smallest x.
MinimizationResult solve_box_qp_lcp(const SymmetricIntMatrix& m, std::size_t max_n = kDefaultLcpMaxN);

/// Completes x̄ to s = (x̄, ȳ, ū, v̄) with ȳ = max(0, -M x̄), ū = M x̄ + ȳ,
/// v̄ = e - x̄. Throws DomainError if x̄ leaves the box and
/// ComplementarityViolation if x̄ is not a KKT point.
ComplementarySolution kkt_witness(const SymmetricIntMatrix& m, std::span<const Rational> xbar);

struct PurifyResult {
  ComplementarySolution solution;
  std::size_t steps = 0;
};

/// Moves a feasible complementary solution along kernel directions of its
/// support columns until those columns are linearly independent. Each step
/// zeroes at least one coordinate. Throws DomainError for invalid input.
PurifyResult purify_to_bfs(const LcpSystem& sys, const ComplementarySolution& start);

/// |basis_det| <= 2^(2L-1). Throws DomainError when no basis is recorded.
bool check_basis_determinant_bound(const ComplementarySolution& sol, const EncodingStats& stats);

}  // namespace copos
