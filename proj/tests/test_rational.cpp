#include <doctest.h>

#include <string>

#include "grouprho/error.hpp"
#include "grouprho/rational.hpp"

using namespace grouprho;

namespace {

Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("parse rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("3/2") == q(3, 2));
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(parse_rational("0.125") == q(1, 8));
  CHECK(parse_rational("1e-6") == q(1, 1000000));
  CHECK(parse_rational("2.5E3") == 2500);
  CHECK(parse_rational("1.5") == q(3, 2));
  // Leading zeros are decimal, not octal.
  CHECK(parse_rational("0.1234") == q(1234, 10000));
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("08/09") == q(8, 9));
  CHECK(parse_rational("0.0009") == q(9, 10000));

  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_rational("e5"), ParseError);
}

TEST_CASE("parse agrees with digit by digit construction") {
  for (int k = 0; k < 200; ++k) {
    std::string frac = std::to_string(k * 7919 % 100000);
    while (frac.size() < 5) frac.insert(frac.begin(), '0');
    Rational expected = 0;
    Rational scale = 1;
    for (char c : frac) {
      scale /= 10;
      expected += scale * (c - '0');
    }
    CHECK(parse_rational("0." + frac) == expected);
    CHECK(parse_rational("12." + frac) == expected + 12);
  }
}

TEST_CASE("directed decimals") {
  CHECK(to_decimal(q(1, 3), 3, Rounding::down) == "0.333");
  CHECK(to_decimal(q(1, 3), 3, Rounding::up) == "0.334");
  CHECK(to_decimal(q(-1, 3), 3, Rounding::down) == "-0.334");
  CHECK(to_decimal(q(-1, 3), 3, Rounding::up) == "-0.333");
  CHECK(to_decimal(q(1, 2), 2, Rounding::up) == "0.50");
  CHECK(decimal_round(q(1, 3), 2, Rounding::up) == q(34, 100));
  for (unsigned d = 0; d < 10; ++d) {
    Rational x = q(22, 7);
    CHECK(decimal_round(x, d, Rounding::down) <= x);
    CHECK(x <= decimal_round(x, d, Rounding::up));
    CHECK(parse_rational(to_decimal(x, d, Rounding::up)) == decimal_round(x, d, Rounding::up));
  }
}

TEST_CASE("integer helpers") {
  CHECK(ipow(Integer(3), 4) == 81);
  CHECK(ipow(q(2, 3), 3) == q(8, 27));
  CHECK(floor_div(Integer(-7), Integer(2)) == -4);
  CHECK(ceil_div(Integer(-7), Integer(2)) == -3);
  CHECK(floor_div(Integer(7), Integer(2)) == 3);
  CHECK(ceil_div(Integer(7), Integer(2)) == 4);
}
