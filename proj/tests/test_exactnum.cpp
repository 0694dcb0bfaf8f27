#include "doctest.h"

#include <random>

#include "detmult/exactnum.hpp"

using namespace detmult;

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK_THROWS_AS(factorial(-1), DomainError);

    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK_THROWS_AS(binomial(-2, 1), DomainError);

    for (long a = 0; a <= 30; ++a)
        for (long b = 0; b <= a; ++b) CHECK(binomial(a, b) == factorial(a) / (factorial(b) * factorial(a - b)));
}

TEST_CASE("rationals stay canonical") {
    const Rational r(Integer(6), Integer(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(4).to_string() == "4");
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("parse round trips") {
    CHECK(Rational::parse("341/16") == Rational(Integer(341), Integer(16)));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("+10/4").to_string() == "5/2");
    for (const char* bad : {"", "1/", "/2", "1/0", "abc", "1.5", "1/-2", "2 "}) CHECK_THROWS_AS(Rational::parse(bad), DomainError);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int i = 0; i < 200; ++i) {
        const Rational r(Integer(num(rng)), Integer(den(rng)));
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("exact arithmetic") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int i = 0; i < 200; ++i) {
        const Rational a(Integer(num(rng)), Integer(den(rng)));
        const Rational b(Integer(num(rng)), Integer(den(rng)));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
    CHECK(pow(Rational(Integer(2), Integer(3)), 3) == Rational(Integer(8), Integer(27)));
    CHECK(abs(Rational(-3)) == Rational(3));
    CHECK(Rational(1) < Rational(Integer(3), Integer(2)));
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(Rational(Integer(1), Integer(8)).to_decimal(2) == "0.12");
    CHECK(Rational(Integer(3), Integer(8)).to_decimal(2) == "0.38");
    CHECK(Rational(Integer(-1), Integer(2)).to_decimal(0) == "0");
    CHECK(Rational(Integer(5), Integer(2)).to_decimal(0) == "2");
    CHECK(Rational(Integer(341), Integer(16)).to_decimal(4) == "21.3125");
    CHECK(Rational(Integer(1), Integer(3)).to_decimal(5) == "0.33333");
}
