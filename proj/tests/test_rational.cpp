#include <doctest.h>

#include "esymm/errors.hpp"
#include "esymm/rational.hpp"
#include "esymm/rng.hpp"

using namespace esymm;

TEST_SUITE("rational") {

TEST_CASE("canonical form: lowest terms, positive denominator") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(6, 3).is_integer());
}

TEST_CASE("string round trip") {
    for (const char* s : {"0", "1", "-1", "7/3", "-22/7", "123456789123456789/2"}) {
        CHECK(Rational::from_string(s).str() == s);
    }
    CHECK(Rational::from_string("4/6").str() == "2/3");
    CHECK_THROWS_AS(Rational::from_string(""), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("x"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/"), ParseError);
}

TEST_CASE("field axioms hold exactly on random triples") {
    Rng rng(101);
    for (int k = 0; k < 200; ++k) {
        Rational a = rng.rational(50, 40), b = rng.rational(50, 40), c = rng.rational(50, 40);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == Rational(0));
        if (!c.is_zero()) CHECK((a / c) * c == a);
    }
}

TEST_CASE("no rounding: 1/3 * 3 == 1") {
    CHECK(Rational(1, 3) * Rational(3) == Rational(1));
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}

TEST_CASE("division and inverse guard zero") {
    CHECK_THROWS(Rational(1).operator/=(Rational(0)));
    CHECK_THROWS(Rational(0).inverse());
    CHECK(Rational(-7, 3).inverse() == Rational(-3, 7));
}

} // TEST_SUITE
