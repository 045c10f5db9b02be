#include <doctest.h>

#include "bocskit/rational.hpp"
#include "helpers.hpp"

using namespace bocskit;

TEST_SUITE_BEGIN("rational");

TEST_CASE("bigint arithmetic round trips through strings") {
    CHECK(BigInt(0).toString() == "0");
    CHECK(BigInt(-17).toString() == "-17");
    CHECK(BigInt::fromString("123456789012345678901234567890").toString() ==
          "123456789012345678901234567890");
    BigInt a = BigInt::fromString("987654321098765432109876543210");
    BigInt b = BigInt::fromString("123456789012345678901234567890");
    CHECK((a + b).toString() == "1111111110111111111011111111100");
    CHECK((a - a).isZero());
    CHECK((a / b).toString() == "8");
}

TEST_CASE("division invariant and gcd on random values") {
    for (int i = 0; i < 200; ++i) {
        long long x = randInt(-100000, 100000);
        long long y = randInt(1, 100000);
        BigInt bx(x), by(y);
        BigInt q = bx / by, r = bx % by;
        CHECK(q * by + r == bx);
        BigInt g = BigInt::gcd(bx, by);
        if (x != 0) {
            CHECK((bx % g).isZero());
            CHECK((by % g).isZero());
        }
    }
}

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
    Rational r(BigInt(4), BigInt(-6));
    CHECK(r.toString() == "-2/3");
    CHECK(Rational::fromString("-10/4").toString() == "-5/2");
    CHECK(Rational::fromString("7").toString() == "7");
    CHECK((Rational(1) + Rational(-1)).isZero());
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("field operations on random small rationals") {
    for (int i = 0; i < 200; ++i) {
        Rational a(BigInt(randInt(-30, 30)), BigInt(randInt(1, 12)));
        Rational b(BigInt(randInt(-30, 30)), BigInt(randInt(1, 12)));
        Rational c(BigInt(randInt(-30, 30)), BigInt(randInt(1, 12)));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.isZero()) CHECK(a / b * b == a);
        if (!a.isZero()) CHECK((a.inverse() * a).toString() == "1");
    }
}

TEST_CASE("matrix rank and kernel") {
    Matrix m(2, 3);
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(2);
    m.at(0, 2) = Rational(3);
    m.at(1, 0) = Rational(2);
    m.at(1, 1) = Rational(4);
    m.at(1, 2) = Rational(6);
    CHECK(m.rank() == 1);
    auto kernel = m.kernelBasis();
    CHECK(kernel.size() == 2);
    for (const auto& v : kernel) {
        auto img = m.apply(v);
        for (const auto& x : img) CHECK(x.isZero());
    }
}

TEST_SUITE_END();
