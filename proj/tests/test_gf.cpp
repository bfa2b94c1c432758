#include <doctest.h>

#include "qmds/gf.hpp"

using qmds::Field;

TEST_CASE("gf: add") {
  CHECK(add(Field(7).element(3), Field(7).element(5)).value() == 1);
  CHECK(add(Field(3).element(2), Field(3).element(0)).value() == 2);
  CHECK(add(Field(5).element(4), Field(5).element(4)).value() == 3);
}

TEST_CASE("gf: mul") {
  CHECK(mul(Field(7).element(3), Field(7).element(5)).value() == 1);
  CHECK(mul(Field(3).element(2), Field(3).element(2)).value() == 1);
  for (std::uint32_t q : {2U, 3U, 11U}) {
    Field f(q);
    for (std::uint32_t x = 0; x < q; ++x) CHECK(mul(f.element(x), f.one()) == f.element(x));
  }
}

TEST_CASE("gf: inv") {
  CHECK(inv(Field(7).element(3)).value() == 5);
  CHECK(inv(Field(5).element(4)).value() == 4);
  CHECK(inv(Field(13).one()).value() == 1);
  CHECK_THROWS_AS(inv(Field(7).zero()), std::domain_error);
}

TEST_CASE("gf: pow") {
  CHECK(pow(Field(3).element(2), 2).value() == 1);
  CHECK(pow(Field(7).element(3), 3).value() == 6);
  CHECK(pow(Field(5).zero(), 0).value() == 1);
  CHECK(pow(Field(5).element(3), 0).value() == 1);
  CHECK(pow(Field(5).zero(), 3).value() == 0);
}

TEST_CASE("gf: construction and mixing") {
  CHECK_THROWS_AS(Field(4), std::invalid_argument);
  CHECK_THROWS_AS(Field(1), std::invalid_argument);
  CHECK_THROWS_AS(Field(0), std::invalid_argument);
  CHECK_THROWS_AS(add(Field(3).one(), Field(5).one()), qmds::FieldMismatch);
  CHECK_THROWS_AS(mul(Field(3).one(), Field(5).one()), qmds::FieldMismatch);
  CHECK_THROWS_AS(qmds::FieldElement(Field(5), 5), std::out_of_range);
  CHECK(Field(7).element(-1).value() == 6);
  CHECK(Field(7).element(15).value() == 1);
}

TEST_CASE("gf: next_prime") {
  CHECK(qmds::next_prime(3) == 3);
  CHECK(qmds::next_prime(4) == 5);
  CHECK(qmds::next_prime(8) == 11);
  CHECK(qmds::next_prime(0) == 2);
}

TEST_CASE("gf: field axioms hold exhaustively for q <= 13") {
  for (std::uint32_t q : {2U, 3U, 5U, 7U, 11U, 13U}) {
    CAPTURE(q);
    Field f(q);
    bool ok = true;
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto x = f.element(a);
      ok = ok && (x + f.zero()) == x && (x * f.one()) == x && (x + (-x)) == f.zero();
      if (a != 0) ok = ok && (inv(x) * x) == f.one();
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto y = f.element(b);
        ok = ok && (x + y) == (y + x) && (x * y) == (y * x);
        ok = ok && (x + y).value() == (a + b) % q && (x * y).value() == (a * b) % q;
        for (std::uint32_t c = 0; c < q; ++c) {
          const auto z = f.element(c);
          ok = ok && ((x + y) + z) == (x + (y + z));
          ok = ok && ((x * y) * z) == (x * (y * z));
          ok = ok && (x * (y + z)) == (x * y + x * z);
        }
      }
    }
    CHECK(ok);
  }
}
