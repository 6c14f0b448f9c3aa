#pragma once

#include <cstddef>
#include <vector>

#include "copos/lcp.hpp"
#include "copos/matrix.hpp"

namespace copos {

inline constexpr std::size_t kDefaultOracleMaxN = 10;

enum class FaceTag : unsigned char { fixed_zero, fixed_one, free };

/// One face of the unit box: each coordinate is pinned to 0, pinned to 1 or
/// free.
using FaceAssignment = std::vector<FaceTag>;

/// The i-th of the 3^n faces (base-3 digits, coordinate 0 least significant).
FaceAssignment face_from_index(std::size_t n, std::uint64_t index);

/// Exact box minimum by visiting all 3^n faces. On each face with a
/// nonsingular restricted Hessian the stationary point is accepted when it
/// lies in the open face; vertices are always evaluated. Throws
/// LimitExceeded when n > max_n.
MinimizationResult face_enumerate_min(const SymmetricIntMatrix& m, std::size_t max_n = kDefaultOracleMaxN);

bool is_copositive(const SymmetricIntMatrix& m, std::size_t max_n = kDefaultOracleMaxN);

}  // namespace copos
