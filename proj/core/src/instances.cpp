#include "copos/instances.hpp"

#include <limits>
#include <random>
#include <string>

#include "copos/error.hpp"

namespace copos {

SymmetricIntMatrix adversarial_matrix(unsigned k) {
  if (k == 0) throw DomainError("adversarial family needs k >= 1");
  return SymmetricIntMatrix::from_upper(2, {pow2(2 * k + 2), -pow2(k + 2), Integer(3)});
}

SymmetricIntMatrix embed(const SymmetricIntMatrix& m, std::size_t n) {
  const std::size_t small = m.dim();
  if (n < small)
    throw DomainError("cannot embed a " + std::to_string(small) + "x" + std::to_string(small) + " matrix into " +
                      std::to_string(n) + "x" + std::to_string(n));
  std::vector<Integer> upper;
  upper.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) upper.push_back(i < small && j < small ? m(i, j) : Integer(0));
  }
  return SymmetricIntMatrix::from_upper(n, std::move(upper));
}

AdversarialInstance adversarial_instance(unsigned k, std::size_t n) {
  if (n < 2) throw DomainError("adversarial instance needs n >= 2");
  AdversarialInstance inst;
  inst.k = k;
  inst.n = n;
  inst.matrix = embed(adversarial_matrix(k), n);
  const std::uint64_t padding = n * (n + 1) / 2 - 3;
  // Entries cost (2k+4) + (k+4) + 3 bits; the quoted total drops one bit
  // from the off-diagonal entry.
  inst.expected_L_strict = 3 * std::uint64_t{k} + 11 + padding;
  inst.published_L = 3 * std::uint64_t{k} + 10 + padding;
  inst.interval_low = make_rational(Integer(1), pow2(k + 1));
  inst.interval_high = make_rational(Integer(3), pow2(k + 1));
  return inst;
}

bool in_certificate_cone(unsigned k, std::span<const Rational> y) {
  if (y.size() < 2) throw DimensionMismatch("certificate cone check needs two coordinates");
  if (sgn(y[1]) <= 0) return false;
  const Rational ratio = y[0] / y[1];
  return make_rational(Integer(1), pow2(k + 1)) < ratio && ratio < make_rational(Integer(3), pow2(k + 1));
}

std::optional<InstanceKind> parse_instance_kind(std::string_view name) {
  if (name == "symmetric") return InstanceKind::symmetric;
  if (name == "nonnegative") return InstanceKind::nonnegative;
  if (name == "psd") return InstanceKind::psd;
  return std::nullopt;
}

const char* to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::symmetric:
      return "symmetric";
    case InstanceKind::nonnegative:
      return "nonnegative";
    case InstanceKind::psd:
      return "psd";
  }
  return "unknown";
}

namespace {

// Uniform integer in [lo, hi] by rejection, so the stream is identical
// across standard library implementations.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

}  // namespace

SymmetricIntMatrix random_instance(InstanceKind kind, std::size_t n, std::uint64_t entry_bound, std::uint64_t seed) {
  if (n == 0) throw DomainError("dimension must be positive");
  if (entry_bound == 0 || entry_bound > (std::uint64_t{1} << 31)) throw DomainError("entry bound must be in [1, 2^31]");
  std::mt19937_64 rng(seed);
  const auto bound = static_cast<std::int64_t>(entry_bound);
  std::vector<Integer> upper;
  upper.reserve(n * (n + 1) / 2);

  if (kind == InstanceKind::psd) {
    std::vector<std::int64_t> g(n * n);
    for (auto& e : g) e = draw(rng, -bound, bound);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        Integer acc = 0;
        for (std::size_t r = 0; r < n; ++r)
          acc += Integer(static_cast<long>(g[r * n + i])) * Integer(static_cast<long>(g[r * n + j]));
        upper.push_back(acc);
      }
    }
  } else {
    const std::int64_t lo = kind == InstanceKind::nonnegative ? 0 : -bound;
    for (std::size_t e = 0; e < n * (n + 1) / 2; ++e) upper.push_back(Integer(static_cast<long>(draw(rng, lo, bound))));
  }
  return SymmetricIntMatrix::from_upper(n, std::move(upper));
}

}  // namespace copos
