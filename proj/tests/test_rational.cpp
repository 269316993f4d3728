#include <doctest.h>

#include "dstokes/rational.hpp"

using namespace dstokes;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(7, 2) * Rational(2, 7) == Rational(1));
    CHECK((Rational(5, 2) - Rational(5, 2)) == Rational(0));
    CHECK(Rational(-9, 3).str() == "-3");
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(pow(Rational(-3, 2), 3) == Rational(-27, 8));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational big(1) ;
    for (int i = 0; i < 62; ++i)
        big *= Rational(2);
    CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
}
