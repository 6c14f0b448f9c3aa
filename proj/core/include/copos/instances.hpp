#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "copos/matrix.hpp"
#include "copos/rational.hpp"

namespace copos {

/// [[2^(2k+2), -2^(k+2)], [-2^(k+2), 3]]. Every non-negative certificate
/// (p, q) has q > 0 and p/q strictly between 1/2^(k+1) and 3/2^(k+1), so
/// the matrix forces certificates of at least k+1 bits. Requires k >= 1.
SymmetricIntMatrix adversarial_matrix(unsigned k);

/// M in the top-left corner of an n x n zero matrix. Throws DomainError
/// when n < dim(M).
SymmetricIntMatrix embed(const SymmetricIntMatrix& m, std::size_t n);

struct AdversarialInstance {
  unsigned k = 1;
  std::size_t n = 2;
  SymmetricIntMatrix matrix{2};
  std::uint64_t expected_L_strict = 0;  // per-entry count: 3k+11 + n(n+1)/2 - 3
  std::uint64_t published_L = 0;        // commonly quoted 3k+10 + n(n+1)/2 - 3
  Rational interval_low;                // 1/2^(k+1)
  Rational interval_high;               // 3/2^(k+1)
};

AdversarialInstance adversarial_instance(unsigned k, std::size_t n = 2);

/// True iff y_2 > 0 and 1/2^(k+1) < y_1/y_2 < 3/2^(k+1). Only the first
/// two coordinates are read.
bool in_certificate_cone(unsigned k, std::span<const Rational> y);

enum class InstanceKind { symmetric, nonnegative, psd };

std::optional<InstanceKind> parse_instance_kind(std::string_view name);
const char* to_string(InstanceKind kind);

/// Deterministic random matrix. symmetric: entries uniform in [-bound, bound];
/// nonnegative: entries uniform in [0, bound]; psd: G^T G with G entries
/// uniform in [-bound, bound].
SymmetricIntMatrix random_instance(InstanceKind kind, std::size_t n, std::uint64_t entry_bound,
                                   std::uint64_t seed);

}  // namespace copos
