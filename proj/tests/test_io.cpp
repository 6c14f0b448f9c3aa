#include <doctest.h>

#include "copos/error.hpp"
#include "copos/instances.hpp"
#include "copos/io.hpp"

using namespace copos;

TEST_SUITE("io") {
  TEST_CASE("parse full and upper-triangular forms") {
    const auto full = parse_matrix("# comment\n2\n\n16 -8   # first row\n-8 3\n");
    CHECK(full == adversarial_matrix(1));
    const auto upper = parse_matrix("2\n16 -8\n3\n");
    CHECK(upper == full);
    CHECK(parse_matrix("1\n-7\n")(0, 0) == -7);
    const auto big = parse_matrix("2\n123456789012345678901234567890 0\n0 +1\n");
    CHECK(big(0, 0) == Integer("123456789012345678901234567890"));
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_matrix("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2\n1 2\n3 4\n"), ParseError);  // not symmetric
    CHECK_THROWS_AS(parse_matrix("2\n1 2\n"), ParseError);       // too few entries
    CHECK_THROWS_AS(parse_matrix("2\n1 x\n2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2\n1.5 0\n0 1\n"), ParseError);

    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_vector("1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_vector("\n"), ParseError);
  }

  TEST_CASE("vectors") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("7") == 7);
    const RationalVector v = parse_vector("# cert\n67108864/1\n1/3\n0\n");
    CHECK(v == RationalVector{67108864, Rational(1, 3), 0});
    CHECK(serialize_vector(v) == "67108864/1\n1/3\n0/1\n");
    CHECK(parse_vector(serialize_vector(v)) == v);
  }

  TEST_CASE("round trip on generated instances") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      for (InstanceKind kind : {InstanceKind::symmetric, InstanceKind::nonnegative, InstanceKind::psd}) {
        const auto m = random_instance(kind, 1 + seed % 6, 1000, seed);
        CHECK(parse_matrix(serialize_matrix(m)) == m);
      }
    }
    for (unsigned k = 1; k <= 8; ++k) {
      const auto m = adversarial_instance(k, 2 + k % 3).matrix;
      CHECK(parse_matrix(serialize_matrix(m)) == m);
    }
  }
}
