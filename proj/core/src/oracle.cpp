#include "copos/oracle.hpp"

#include <string>

#include "copos/error.hpp"
#include "copos/linalg.hpp"

namespace copos {

FaceAssignment face_from_index(std::size_t n, std::uint64_t index) {
  FaceAssignment face(n);
  for (std::size_t i = 0; i < n; ++i) {
    face[i] = static_cast<FaceTag>(index % 3);
    index /= 3;
  }
  return face;
}

namespace {

// Stationary point of Q restricted to the face, if the restricted Hessian is
// nonsingular and the point lies in the open face. Vertices return
// themselves.
std::optional<RationalVector> face_candidate(const SymmetricIntMatrix& m, const FaceAssignment& face) {
  const std::size_t n = m.dim();
  RationalVector x = zeros(n);
  std::vector<std::size_t> free_idx;
  std::vector<std::size_t> one_idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (face[i] == FaceTag::free) free_idx.push_back(i);
    if (face[i] == FaceTag::fixed_one) {
      one_idx.push_back(i);
      x[i] = 1;
    }
  }
  if (free_idx.empty()) return x;

  // Q(x) = x_F^T M_FF x_F + 2 x_F^T M_FO e + const, stationary where
  // M_FF x_F = -M_FO e.
  const std::size_t k = free_idx.size();
  RationalMatrix hessian(k, k);
  RationalVector rhs(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) hessian(a, b) = Rational(m(free_idx[a], free_idx[b]));
    Integer linear = 0;
    for (std::size_t o : one_idx) linear += m(free_idx[a], o);
    rhs[a] = Rational(-linear);
  }
  const Elimination e = eliminate(std::move(hessian), std::move(rhs));
  if (sgn(*e.determinant) == 0) return std::nullopt;
  for (std::size_t a = 0; a < k; ++a) {
    const Rational& c = e.solution[a];
    if (sgn(c) <= 0 || c >= 1) return std::nullopt;
    x[free_idx[a]] = c;
  }
  return x;
}

}  // namespace

MinimizationResult face_enumerate_min(const SymmetricIntMatrix& m, std::size_t max_n) {
  const std::size_t n = m.dim();
  if (n > max_n || n > 40)
    throw LimitExceeded("face enumeration limited to n <= " + std::to_string(max_n) + ", got n = " +
                        std::to_string(n));
  std::uint64_t faces = 1;
  for (std::size_t i = 0; i < n; ++i) faces *= 3;

  MinimizationResult result;
  result.method = MinimizationMethod::oracle;
  bool have = false;
  for (std::uint64_t index = 0; index < faces; ++index) {
    const std::optional<RationalVector> x = face_candidate(m, face_from_index(n, index));
    if (!x) continue;
    const Rational value = quadratic_form(m, *x);
    if (!have || value < result.gamma || (value == result.gamma && lex_less(*x, result.argmin))) {
      result.gamma = value;
      result.argmin = *x;
      have = true;
    }
  }
  return result;
}

bool is_copositive(const SymmetricIntMatrix& m, std::size_t max_n) {
  return sgn(face_enumerate_min(m, max_n).gamma) >= 0;
}

}  // namespace copos
