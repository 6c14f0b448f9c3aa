#include "copos/rational.hpp"

#include <sstream>

#include "copos/error.hpp"

namespace copos {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

std::uint64_t bit_length(const Integer& z) {
  if (z == 0) return 0;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

Integer pow2(std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

RationalVector zeros(std::size_t n) { return RationalVector(n, Rational(0)); }

RationalVector ones(std::size_t n) { return RationalVector(n, Rational(1)); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RationalVector scaled(std::span<const Rational> v, const Rational& factor) {
  RationalVector out(v.begin(), v.end());
  for (auto& c : out) c *= factor;
  return out;
}

bool is_nonnegative(std::span<const Rational> v) {
  for (const auto& c : v)
    if (sgn(c) < 0) return false;
  return true;
}

bool in_unit_box(std::span<const Rational> v) {
  for (const auto& c : v)
    if (sgn(c) < 0 || c > 1) return false;
  return true;
}

bool lex_less(std::span<const Rational> a, std::span<const Rational> b) {
  const std::size_t len = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << to_string(v[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace copos
