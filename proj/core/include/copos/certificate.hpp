#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "copos/lcp.hpp"
#include "copos/matrix.hpp"
#include "copos/rational.hpp"

namespace copos {

enum class CertificateScheme {
  fixed_denominator,  // grid spacing 1/(4 d n^2)
  dyadic,             // grid spacing 2^-l with l minimal s.t. 2^l >= 4 d n^2
};

const char* to_string(CertificateScheme scheme);

struct CertificateReport {
  RationalVector y;
  Rational value;  // y^T M y
  CertificateScheme scheme = CertificateScheme::fixed_denominator;
  std::uint64_t L = 0;
  Integer d;
  std::size_t n = 0;
  std::uint64_t measured_bits = 0;
  bool bound_bits_ok = false;
  Integer spacing_denominator;
  // Intermediate values of the construction.
  Rational gamma;
  RationalVector argmin;
  RationalVector scaled;
  MinimizationMethod method = MinimizationMethod::lcp_enumeration;
};

/// x* = 2^(2L-1) x̄. Throws DomainError if x̄ leaves the unit box.
RationalVector scale_optimal(std::span<const Rational> xbar, std::uint64_t L);

/// 4 d n^2.
Integer fixed_spacing_denominator(const Integer& d, std::size_t n);

/// y_j = ceil(4dn^2 x*_j) / (4dn^2). Throws DomainError for d == 0 or a
/// negative coordinate.
RationalVector round_certificate(std::span<const Rational> xstar, const Integer& d, std::size_t n);

struct DyadicRounding {
  RationalVector y;
  std::uint64_t l = 0;
};

/// y_j = ceil(2^l x*_j) / 2^l, l minimal with 2^l >= 4 d n^2.
DyadicRounding dyadic_certificate(std::span<const Rational> xstar, const Integer& d, std::size_t n);

/// Bits needed to write y on its grid, without sign bits. Fixed scheme: per
/// coordinate the integer part, the fractional numerator and the denominator.
/// Dyadic scheme: per coordinate the integer part plus l fraction bits.
/// Throws DomainError if a coordinate is off the grid.
std::uint64_t measured_complexity(std::span<const Rational> y, CertificateScheme scheme,
                                  const Integer& spacing_denominator);

/// bits^2 <= 289 L^3 (fixed) or bits^2 <= 100 L^3 (dyadic), i.e. bits is
/// at most 17 L^(3/2) resp. 10 L^(3/2).
bool within_complexity_bound(std::uint64_t bits, std::uint64_t L, CertificateScheme scheme);

struct CertifyOptions {
  MinimizationMethod method = MinimizationMethod::lcp_enumeration;
  std::size_t max_n = kDefaultLcpMaxN;
};

/// Full construction: box minimum, scaling, rounding, exact check of
/// y^T M y < 0 and the complexity verdict. Throws CopositiveInput for
/// copositive (including zero) matrices.
CertificateReport certify_noncopositive(const SymmetricIntMatrix& m, CertificateScheme scheme,
                                        const CertifyOptions& options = {});

struct Verification {
  bool valid = false;
  Rational value;
  std::string reason;  // empty when valid
};

/// valid iff y >= 0 and y^T M y < 0. Throws DimensionMismatch.
Verification verify_certificate(const SymmetricIntMatrix& m, std::span<const Rational> y);

}  // namespace copos
