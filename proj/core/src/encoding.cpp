#include "copos/encoding.hpp"

#include "copos/error.hpp"

namespace copos {

std::uint64_t encode_bits(const Integer& m) {
  // ceil(log2(|m|+1)) is the bit length of |m|.
  return bit_length(m) + 1;
}

EncodingStats encoding_length(const SymmetricIntMatrix& m) {
  EncodingStats stats;
  stats.n = m.dim();
  stats.d = 0;
  for (const auto& entry : m.upper()) {
    stats.L += encode_bits(entry);
    Integer mag = abs(entry);
    if (mag > stats.d) stats.d = mag;
  }
  return stats;
}

Rational gamma_threshold(std::uint64_t L) {
  if (L == 0) throw DomainError("encoding length must be positive");
  return make_rational(Integer(-1), pow2(2 * L - 1));
}

Integer determinant_bound(std::uint64_t L) {
  if (L == 0) throw DomainError("encoding length must be positive");
  return pow2(2 * L - 1);
}

}  // namespace copos
