#include <doctest.h>

#include <limits>
#include <numeric>

#include "cqhilb/rational.hpp"
#include "gen.hpp"

using cqh::Rational;

TEST_CASE("rational normalizes to lowest terms with positive denominator") {
    CHECK(Rational(6, -4).num() == -3);
    CHECK(Rational(6, -4).den() == 2);
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational string round trip") {
    CHECK(Rational(4, 5).str() == "4/5");
    CHECK(Rational(3).str() == "3/1");
    CHECK(Rational::parse("-2/6") == Rational(-1, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS(Rational::parse("1/x"));
    CHECK_THROWS(Rational::parse(""));
    for (int i = 0; i < 200; ++i) {
        const Rational q = gen::rational(1000);
        CHECK(Rational::parse(q.str()) == q);
    }
}

TEST_CASE("rational field axioms on random values") {
    for (int i = 0; i < 500; ++i) {
        const Rational a = gen::rational(), b = gen::rational(), c = gen::rational();
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(std::gcd(a.num(), a.den()) == 1);
        CHECK(a.den() > 0);
    }
}

TEST_CASE("rational ordering agrees with cross multiplication") {
    for (int i = 0; i < 500; ++i) {
        const Rational a = gen::rational(), b = gen::rational();
        const bool less = a.num() * b.den() < b.num() * a.den();
        CHECK((a < b) == less);
    }
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("overflow is reported, not wrapped") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(Rational(big) + Rational(1), cqh::ArithmeticOverflow);
    CHECK_THROWS_AS(Rational(big) * Rational(2), cqh::ArithmeticOverflow);
    CHECK_THROWS_AS(-Rational(std::numeric_limits<std::int64_t>::min()), cqh::ArithmeticOverflow);
}
