#include <doctest.h>

#include <stdexcept>

#include "cuspbound/rational.hpp"

using cusp::Rational;

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

TEST_CASE("parse_rational accepts canonical and non-canonical forms") {
  CHECK(cusp::parse_rational("3/4") == cusp::ratio(3, 4));
  CHECK(cusp::parse_rational("-3/4") == cusp::ratio(-3, 4));
  CHECK(cusp::parse_rational("7") == Rational(7));
  CHECK(cusp::parse_rational("-7") == Rational(-7));
  CHECK(cusp::parse_rational("+2/6") == cusp::ratio(1, 3));
  CHECK(cusp::parse_rational("0/5") == Rational(0));
  CHECK(cusp::parse_rational("-0") == Rational(0));
  CHECK(cusp::parse_rational("10/4") == cusp::ratio(5, 2));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(cusp::parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(cusp::parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(cusp::parse_rational("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(cusp::parse_rational(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(cusp::parse_rational("1 "), std::invalid_argument);
  CHECK_THROWS_AS(cusp::parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(cusp::parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(cusp::parse_rational("/2"), std::invalid_argument);
  CHECK_THROWS_AS(cusp::parse_rational("--1"), std::invalid_argument);
  CHECK_THROWS_AS(cusp::parse_rational("1//2"), std::invalid_argument);
  CHECK_THROWS_AS(cusp::parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("parse_rational_list splits on commas") {
  const auto values = cusp::parse_rational_list("1,1/2,-3/2");
  REQUIRE(values.size() == 3);
  CHECK(values[0] == Rational(1));
  CHECK(values[1] == cusp::ratio(1, 2));
  CHECK(values[2] == cusp::ratio(-3, 2));
  CHECK_THROWS_AS(cusp::parse_rational_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(cusp::parse_rational_list(""), std::invalid_argument);
  CHECK_THROWS_AS(cusp::parse_rational_list("1,2,"), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Formatting and integer helpers
// ---------------------------------------------------------------------------

TEST_CASE("format_rational is canonical and round-trips") {
  CHECK(cusp::format_rational(cusp::ratio(-2, 6)) == "-1/3");
  CHECK(cusp::format_rational(Rational(5)) == "5");
  CHECK(cusp::format_rational(Rational(0)) == "0");
  CHECK(cusp::format_rational(cusp::ratio(7, -2)) == "-7/2");
  CHECK(cusp::parse_rational(cusp::format_rational(cusp::ratio(22, 8))) ==
        cusp::ratio(11, 4));
}

TEST_CASE("floor and fractional part follow the floor convention") {
  CHECK(cusp::floor_of(cusp::ratio(7, 2)) == 3);
  CHECK(cusp::floor_of(cusp::ratio(-7, 2)) == -4);
  CHECK(cusp::floor_of(Rational(4)) == 4);
  CHECK(cusp::fractional_part(cusp::ratio(7, 2)) == cusp::ratio(1, 2));
  CHECK(cusp::fractional_part(cusp::ratio(-7, 2)) == cusp::ratio(1, 2));
  CHECK(cusp::fractional_part(Rational(3)) == 0);
}

TEST_CASE("is_integer checks the reduced denominator") {
  CHECK(cusp::is_integer(Rational(3)));
  CHECK(cusp::is_integer(cusp::ratio(6, 2)));
  CHECK_FALSE(cusp::is_integer(cusp::ratio(1, 2)));
}

TEST_CASE("ratio canonicalizes sign and common factors") {
  CHECK(cusp::ratio(2, -4) == cusp::ratio(-1, 2));
  CHECK(cusp::format_rational(cusp::ratio(2, -4)) == "-1/2");
}

TEST_CASE("decimal_string rounds half away from zero") {
  CHECK(cusp::decimal_string(cusp::ratio(1, 3), 2) == "0.33");
  CHECK(cusp::decimal_string(cusp::ratio(-1, 3), 2) == "-0.33");
  CHECK(cusp::decimal_string(cusp::ratio(1, 2), 0) == "1");
  CHECK(cusp::decimal_string(cusp::ratio(-1, 2), 0) == "-1");
  CHECK(cusp::decimal_string(cusp::ratio(7, 2), 1) == "3.5");
  CHECK(cusp::decimal_string(cusp::ratio(-5, 4), 1) == "-1.3");
  CHECK(cusp::decimal_string(cusp::ratio(-1, 8), 1) == "-0.1");
  CHECK(cusp::decimal_string(Rational(12), 2) == "12.00");
  CHECK(cusp::decimal_string(cusp::ratio(1, 1000), 2) == "0.00");
  CHECK_THROWS_AS(cusp::decimal_string(Rational(1), -1),
                  std::invalid_argument);
}
