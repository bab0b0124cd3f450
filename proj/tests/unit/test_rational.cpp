#include <doctest.h>

#include "sametype/rational.hpp"

using namespace sametype;

TEST_SUITE("rational") {

TEST_CASE("parse and canonical serialization") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4/8")) == "-1/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK(to_string(parse_rational("5/-10")) == "-1/2");  // denominator forced positive
  CHECK(parse_rational("1/3") + parse_rational("1/6") == parse_rational("1/2"));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("sign") {
  CHECK(sign_of(parse_rational("3/7")) == 1);
  CHECK(sign_of(parse_rational("-1/9")) == -1);
  CHECK(sign_of(Rational(0)) == 0);
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(50, 25) == Integer("126410606437752"));
}

}  // TEST_SUITE
