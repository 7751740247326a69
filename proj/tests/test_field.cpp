#include <doctest.h>

#include "tc/field.hpp"

using tc::Field;

TEST_CASE("rational field leaves canonical rationals alone") {
  Field q = Field::rationals();
  CHECK(q.reduce(mpq_class(-7, 3)) == mpq_class(-7, 3));
  CHECK(q.reduce(mpq_class(0)) == 0);
  CHECK(q.inverse(mpq_class(-7, 3)) == mpq_class(-3, 7));
  CHECK(q.name() == "Q");
  CHECK_THROWS(q.inverse(mpq_class(0)));
}

TEST_CASE("prime field reduces to canonical residues") {
  Field f5 = Field::prime(5);
  CHECK(f5.reduce(mpq_class(7)) == 2);
  CHECK(f5.reduce(mpq_class(-1)) == 4);
  CHECK(f5.reduce(mpq_class(10)) == 0);
  // 1/2 = 3 mod 5 because 2*3 = 6 = 1.
  CHECK(f5.reduce(mpq_class(1, 2)) == 3);
  CHECK(f5.inverse(mpq_class(3)) == 2);
  CHECK(f5.name() == "F5");
  CHECK_THROWS(f5.reduce(mpq_class(1, 5)));
  CHECK_THROWS(f5.inverse(mpq_class(0)));
}

TEST_CASE("prime constructor rejects composites") {
  CHECK_THROWS(Field::prime(1));
  CHECK_THROWS(Field::prime(4));
  CHECK_THROWS(Field::prime(0));
  CHECK(Field::prime(2).characteristic == 2);
  CHECK(Field::prime(97).characteristic == 97);
}

TEST_CASE("primality helper") {
  CHECK_FALSE(tc::is_prime(0));
  CHECK_FALSE(tc::is_prime(1));
  CHECK(tc::is_prime(2));
  CHECK(tc::is_prime(3));
  CHECK_FALSE(tc::is_prime(9));
  CHECK(tc::is_prime(101));
  CHECK_FALSE(tc::is_prime(1001));
}
