#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace copos {

// Arbitrary-precision integers and rationals. mpq_class keeps every value in
// lowest terms with a positive denominator after each arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Builds num/den in lowest terms. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Exact "p/q" form; integers are written with denominator 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Number of binary digits of |z|; 0 for z == 0.
std::uint64_t bit_length(const Integer& z);

/// 2^e as an exact integer.
Integer pow2(std::uint64_t e);

RationalVector zeros(std::size_t n);
RationalVector ones(std::size_t n);

/// Inner product; throws DimensionMismatch on length mismatch.
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

RationalVector scaled(std::span<const Rational> v, const Rational& factor);

bool is_nonnegative(std::span<const Rational> v);

/// True iff every coordinate lies in [0, 1].
bool in_unit_box(std::span<const Rational> v);

/// Strict lexicographic order on equal-length vectors.
bool lex_less(std::span<const Rational> a, std::span<const Rational> b);

std::string to_string(std::span<const Rational> v);

}  // namespace copos
