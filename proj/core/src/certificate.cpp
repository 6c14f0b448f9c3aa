#include "copos/certificate.hpp"

#include <stdexcept>
#include <string>

#include "copos/encoding.hpp"
#include "copos/error.hpp"
#include "copos/oracle.hpp"

namespace copos {

const char* to_string(CertificateScheme scheme) {
  switch (scheme) {
    case CertificateScheme::fixed_denominator:
      return "fixed";
    case CertificateScheme::dyadic:
      return "dyadic";
  }
  return "unknown";
}

RationalVector scale_optimal(std::span<const Rational> xbar, std::uint64_t L) {
  if (L == 0) throw DomainError("encoding length must be positive");
  if (!in_unit_box(xbar)) throw DomainError("scale_optimal: point lies outside [0,1]^n");
  return scaled(xbar, Rational(pow2(2 * L - 1)));
}

Integer fixed_spacing_denominator(const Integer& d, std::size_t n) {
  return Integer(4) * d * Integer(static_cast<unsigned long>(n)) * Integer(static_cast<unsigned long>(n));
}

namespace {

void check_rounding_input(std::span<const Rational> xstar, const Integer& d, std::size_t n) {
  if (d <= 0) throw DomainError("rounding needs d >= 1 (a zero matrix is copositive)");
  if (n == 0) throw DomainError("dimension must be positive");
  if (!is_nonnegative(xstar)) throw DomainError("rounding needs a non-negative point");
}

RationalVector round_up_to_grid(std::span<const Rational> xstar, const Integer& denominator) {
  RationalVector y(xstar.size());
  const Rational q(denominator);
  for (std::size_t j = 0; j < xstar.size(); ++j) y[j] = make_rational(ceil(q * xstar[j]), denominator);
  return y;
}

// Bits for a non-negative integer without sign: ceil(log2(z+1)), one bit for 0.
std::uint64_t unsigned_bits(const Integer& z) { return z == 0 ? 1 : bit_length(z); }

}  // namespace

RationalVector round_certificate(std::span<const Rational> xstar, const Integer& d, std::size_t n) {
  check_rounding_input(xstar, d, n);
  return round_up_to_grid(xstar, fixed_spacing_denominator(d, n));
}

DyadicRounding dyadic_certificate(std::span<const Rational> xstar, const Integer& d, std::size_t n) {
  check_rounding_input(xstar, d, n);
  const Integer target = fixed_spacing_denominator(d, n);
  DyadicRounding out;
  // Smallest l with 2^l >= target.
  out.l = bit_length(target - 1);
  out.y = round_up_to_grid(xstar, pow2(out.l));
  return out;
}

std::uint64_t measured_complexity(std::span<const Rational> y, CertificateScheme scheme,
                                  const Integer& spacing_denominator) {
  if (spacing_denominator <= 0) throw DomainError("spacing denominator must be positive");
  std::uint64_t fraction_bits = 0;
  if (scheme == CertificateScheme::dyadic) {
    fraction_bits = bit_length(spacing_denominator) - 1;
    if (spacing_denominator != pow2(fraction_bits))
      throw DomainError("dyadic spacing denominator must be a power of two");
  }
  const Rational q(spacing_denominator);
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (sgn(y[j]) < 0) throw DomainError("certificate coordinate " + std::to_string(j) + " is negative");
    const Integer whole = floor(y[j]);
    const Rational numerator = (y[j] - Rational(whole)) * q;
    if (numerator.get_den() != 1)
      throw DomainError("coordinate " + std::to_string(j) + " is not on the 1/" + spacing_denominator.get_str() +
                        " grid");
    bits += unsigned_bits(whole);
    if (scheme == CertificateScheme::dyadic) {
      bits += fraction_bits;
    } else {
      bits += unsigned_bits(numerator.get_num()) + unsigned_bits(spacing_denominator);
    }
  }
  return bits;
}

bool within_complexity_bound(std::uint64_t bits, std::uint64_t L, CertificateScheme scheme) {
  const unsigned long factor = scheme == CertificateScheme::dyadic ? 100 : 289;
  const Integer lhs = Integer(static_cast<unsigned long>(bits)) * Integer(static_cast<unsigned long>(bits));
  Integer cube = Integer(static_cast<unsigned long>(L));
  cube = cube * cube * cube;
  return lhs <= Integer(factor) * cube;
}

CertificateReport certify_noncopositive(const SymmetricIntMatrix& m, CertificateScheme scheme,
                                        const CertifyOptions& options) {
  if (m.is_zero()) throw CopositiveInput("the zero matrix is copositive; no certificate exists");

  const MinimizationResult min = options.method == MinimizationMethod::oracle
                                     ? face_enumerate_min(m, options.max_n)
                                     : solve_box_qp_lcp(m, options.max_n);
  if (sgn(min.gamma) >= 0) throw CopositiveInput("matrix is copositive; no certificate exists");

  const EncodingStats stats = encoding_length(m);
  CertificateReport report;
  report.scheme = scheme;
  report.L = stats.L;
  report.d = stats.d;
  report.n = stats.n;
  report.gamma = min.gamma;
  report.argmin = min.argmin;
  report.method = min.method;
  report.scaled = scale_optimal(min.argmin, stats.L);

  if (scheme == CertificateScheme::dyadic) {
    DyadicRounding r = dyadic_certificate(report.scaled, stats.d, stats.n);
    report.y = std::move(r.y);
    report.spacing_denominator = pow2(r.l);
  } else {
    report.y = round_certificate(report.scaled, stats.d, stats.n);
    report.spacing_denominator = fixed_spacing_denominator(stats.d, stats.n);
  }

  report.value = quadratic_form(m, report.y);
  if (sgn(report.value) >= 0)
    throw std::logic_error("rounded certificate has non-negative value " + to_string(report.value));
  report.measured_bits = measured_complexity(report.y, scheme, report.spacing_denominator);
  report.bound_bits_ok = within_complexity_bound(report.measured_bits, report.L, scheme);
  return report;
}

Verification verify_certificate(const SymmetricIntMatrix& m, std::span<const Rational> y) {
  if (y.size() != m.dim())
    throw DimensionMismatch("certificate has " + std::to_string(y.size()) + " coordinates, matrix dimension is " +
                            std::to_string(m.dim()));
  Verification v;
  v.value = quadratic_form(m, y);
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (sgn(y[j]) < 0) {
      v.reason = "coordinate " + std::to_string(j) + " is negative";
      return v;
    }
  }
  if (sgn(v.value) >= 0) {
    v.reason = "y^T M y = " + to_string(v.value) + " is not negative";
    return v;
  }
  v.valid = true;
  return v;
}

}  // namespace copos
