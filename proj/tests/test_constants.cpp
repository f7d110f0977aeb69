#include <doctest.h>

#include "kingsim/constants.hpp"

using namespace kingsim;

TEST_CASE("canonical constants reproduce the exact chain") {
    auto report = verify_constants(Rational(2, 17), Rational(1, 4000));
    CHECK(report.all_passed());
    CHECK(report.w1_coeff == Rational(25983, 68000));
    CHECK(report.w2_coeff == Rational(42017, 68000));
    CHECK(report.dense_coeff == Rational(6483, 17000) * Rational(1000, 999));
    CHECK(report.row_coeff == Rational(475777, 769896));
    CHECK(report.final_value == Rational(3999, 4000) * Rational(475777, 769896));
    CHECK(report.target == Rational(21, 34));
    CHECK(report.margin > Rational(0));
    CHECK(decimal_prefix(report.final_value, 5) == "0.61782");
    CHECK(decimal_prefix(report.target, 5) == "0.61764");
}

TEST_CASE("kappa = 1/4 breaks the claim-1 condition") {
    auto report = verify_constants(Rational(2, 17), Rational(1, 4));
    bool claim1_failed = false;
    for (const auto& c : report.checks)
        if (c.name == "claim1-condition") claim1_failed = !c.passed;
    CHECK(claim1_failed);
    CHECK_FALSE(report.all_passed());
}

TEST_CASE("margin grows as kappa shrinks") {
    auto m1 = verify_constants(Rational(2, 17), Rational(1, 4000)).margin;
    auto m2 = verify_constants(Rational(2, 17), Rational(1, 8000)).margin;
    auto m3 = verify_constants(Rational(2, 17), Rational(1, 16000)).margin;
    CHECK(m1 < m2);
    CHECK(m2 < m3);
}

TEST_CASE("decimal prefixes are plain digit expansions") {
    CHECK(decimal_prefix(Rational(1, 2), 3) == "0.500");
    CHECK(decimal_prefix(Rational(21, 34), 7) == "0.6176470");
    CHECK(decimal_prefix(Rational(0), 2) == "0.00");
    CHECK_THROWS(decimal_prefix(Rational(3, 2), 2));
}
