#include "doctest.h"

#include "goldie/rational.hpp"

using namespace goldie;

TEST_CASE("partial order on rationals") {
  CHECK(z_comparable(Rational(3), Rational(1)));
  CHECK(z_comparable(Rational(1, 2), Rational(3, 2)));
  CHECK(!z_comparable(Rational(1), Rational(3, 2)));
  CHECK(z_greater(Rational(3), Rational(1)));
  CHECK(!z_greater(Rational(1), Rational(3)));
  CHECK(!z_greater(Rational(1), Rational(1)));
  CHECK(!z_greater(Rational(3, 2), Rational(1)));  // incomparable
  CHECK(z_geq(Rational(1), Rational(1)));
  CHECK(z_geq(Rational(5, 2), Rational(1, 2)));
}

TEST_CASE("floor and fractional part") {
  CHECK(rational_floor(Rational(7, 2)) == 3);
  CHECK(rational_floor(Rational(-7, 2)) == -4);
  CHECK(rational_floor(Rational(4)) == 4);
  CHECK(fractional_part(Rational(7, 2)) == Rational(1, 2));
  CHECK(fractional_part(Rational(-7, 2)) == Rational(1, 2));
  CHECK(fractional_part(Rational(-2)) == 0);
}

TEST_CASE("parsing and printing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/ 2"), std::invalid_argument);
}
