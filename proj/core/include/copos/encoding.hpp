#pragma once

#include <cstdint>

#include "copos/matrix.hpp"
#include "copos/rational.hpp"

namespace copos {

/// Binary encoding length of a symmetric integer matrix, counted over the
/// upper triangle: one magnitude field plus one sign bit per entry.
struct EncodingStats {
  std::uint64_t L = 0;  // total bits
  Integer d;            // max |m_ij|
  std::size_t n = 0;
};

/// ceil(log2(|m|+1)) + 1; a zero entry costs a single bit.
std::uint64_t encode_bits(const Integer& m);

EncodingStats encoding_length(const SymmetricIntMatrix& m);

/// -2^(-2L+1): every non-copositive integer matrix of encoding length L has
/// box minimum at or below this value.
Rational gamma_threshold(std::uint64_t L);

/// 2^(2L-1), the bound on |det B| for every basis B of the complementarity
/// system.
Integer determinant_bound(std::uint64_t L);

}  // namespace copos
