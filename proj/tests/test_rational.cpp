#include <doctest.h>

#include <sstream>

#include "zonelab/harness.hpp"
#include "zonelab/rational.hpp"

using zonelab::Error;
using zonelab::ErrorCode;
using zonelab::Rational;
using zonelab::SplitMix64;

namespace {

Rational random_rational(SplitMix64& rng) {
    return Rational(rng.next_int(-500, 500), rng.next_int(1, 60));
}

} // namespace

TEST_CASE("rational canonical form") {
    Rational r(2, 6);
    CHECK(r.numerator() == 1);
    CHECK(r.denominator() == 3);

    Rational neg(3, -6);
    CHECK(neg.numerator() == -1);
    CHECK(neg.denominator() == 2);

    CHECK(Rational(0, 17).numerator() == 0);
    CHECK(Rational(0, 17).denominator() == 1);

    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational arithmetic is exact") {
    Rational third(1, 3);
    Rational sum = third + third + third;
    CHECK(sum == Rational(1));

    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);

    CHECK(Rational(-5, 7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
}

TEST_CASE("rational comparisons form a total order") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 1) > Rational(13, 2));

    SplitMix64 rng(21);
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        Rational c = random_rational(rng);
        // trichotomy
        int relations = (a < b ? 1 : 0) + (a == b ? 1 : 0) + (b < a ? 1 : 0);
        CHECK(relations == 1);
        // transitivity
        if (a < b && b < c) CHECK(a < c);
    }
}

TEST_CASE("field identities hold for random operands") {
    SplitMix64 rng(37);
    for (int i = 0; i < 300; ++i) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational::parse("1/2") == Rational(1, 2));
    CHECK(Rational::parse("0") == Rational(0));

    CHECK_THROWS_AS(Rational::parse(""), Error);
    CHECK_THROWS_AS(Rational::parse("+3"), Error);
    CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("a/b"), Error);
    CHECK_THROWS_AS(Rational::parse("1 /2"), Error);
}

TEST_CASE("parse round-trips printing") {
    SplitMix64 rng(99);
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(rng);
        CHECK(Rational::parse(a.str()) == a);
    }
    std::ostringstream os;
    os << Rational(-3, 4) << " " << Rational(5);
    CHECK(os.str() == "-3/4 5");
}

TEST_CASE("arbitrary precision survives large products") {
    Rational big = Rational(1);
    for (int i = 1; i <= 40; ++i) {
        big *= Rational(1000000007L, i);
    }
    Rational back = big;
    for (int i = 1; i <= 40; ++i) {
        back /= Rational(1000000007L, i);
    }
    CHECK(back == Rational(1));
}
