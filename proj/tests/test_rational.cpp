#include "doctest.h"
#include "flatdirac/rational.hpp"

using namespace flatdirac;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(7, 3) / Rational(7, 3)) == Rational(1));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-1, 4).mod1() == Rational(3, 4));
    CHECK(Rational(9, 4).mod1() == Rational(1, 4));
    CHECK(Rational(5, 2).round_to_int() == 3);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational parse/str round trip") {
    for (const char* s : {"0", "5", "-3", "1/2", "-7/4", "3/8"}) {
        Rational r = Rational::parse(s);
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK_THROWS_AS(Rational::parse("x/y"), Error);
}

TEST_CASE("qsqrt2 ring") {
    QSqrt2 s{Rational(0), Rational(1)};  // sqrt2
    CHECK((s * s) == QSqrt2(Rational(2)));
    QSqrt2 inv{Rational(0), Rational(1, 2)};  // 1/sqrt2
    CHECK((s * inv) == QSqrt2(Rational(1)));
    QSqrt2 x{Rational(1), Rational(-2)};
    CHECK((x + (-x)).is_zero());
    CHECK(x.to_double() == doctest::Approx(1 - 2 * 1.41421356237).epsilon(1e-9));
}

TEST_CASE("gaussian rationals and quarter phases") {
    GaussianRational i{Rational(0), Rational(1)};
    CHECK((i * i) == GaussianRational(Rational(-1)));
    CHECK(quarter_phase(Rational(0)) == GaussianRational(Rational(1)));
    CHECK(quarter_phase(Rational(1, 4)) == -i);
    CHECK(quarter_phase(Rational(1, 2)) == GaussianRational(Rational(-1)));
    CHECK(quarter_phase(Rational(-1, 4)) == i);
    CHECK(quarter_phase(Rational(9, 4)) == -i);
    CHECK_THROWS_AS(quarter_phase(Rational(1, 8)), Error);
    CHECK(i_power(3) == -i);
    CHECK(i_power(-1) == -i);
}
