#include <doctest.h>

#include "kingsim/rational.hpp"

using kingsim::Rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) - Rational(2, 17)) == Rational(13, 34));
    CHECK((Rational(3, 4) * Rational(2, 3)) == Rational(1, 2));
    CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1, 2) / Rational(0));
}

TEST_CASE("rational comparisons and rounding") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 17) < Rational(997, 8000));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(6, 3).is_integer());
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("2/17") == Rational(2, 17));
    CHECK(Rational::parse("0.5") == Rational(1, 2));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("1/4000") == Rational(1, 4000));
    CHECK_THROWS(Rational::parse(""));
}
