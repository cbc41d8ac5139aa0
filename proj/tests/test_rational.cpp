#include <doctest.h>

#include "chaincover/rational.hpp"

using namespace chaincover;

TEST_CASE("decimal parsing is exact") {
    CHECK(parse_decimal("0.25") == Rational(1, 4));
    CHECK(parse_decimal("-0.25") == Rational(-1, 4));
    CHECK(parse_decimal("2.1") == Rational(21, 10));
    CHECK(parse_decimal("3") == Rational(3));
    CHECK(parse_decimal("+4.50") == Rational(9, 2));
    CHECK(parse_decimal("0.0") == Rational(0));
    CHECK(parse_decimal("007") == Rational(7));
}

TEST_CASE("decimal parsing rejects junk") {
    CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("."), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("--1"), std::invalid_argument);
}

TEST_CASE("exact formatting round-trips terminating decimals") {
    CHECK(format_exact(Rational(1, 4)) == "0.25");
    CHECK(format_exact(Rational(-21, 10)) == "-2.1");
    CHECK(format_exact(Rational(3)) == "3");
    CHECK(format_exact(Rational(0)) == "0");
    CHECK(format_exact(Rational(1, 3)) == "1/3");
    CHECK(format_exact(parse_decimal("6.20")) == "6.2");
}
