#include <cstdio>

#include <doctest.h>

#include "generators.hpp"
#include "padic/big_rational.hpp"
#include "padic/errors.hpp"

using namespace padic;

namespace {

std::string printf_g15(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

} // namespace

TEST_CASE("canonical form")
{
    const BigRational q(BigInt(6), BigInt(-4));
    CHECK(q.to_string() == "-3/2");
    CHECK(q.denominator() == 2);
    CHECK(BigRational(BigInt(10), BigInt(5)).is_integer());
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), DomainError);
}

TEST_CASE("parse fractions and decimals exactly")
{
    CHECK(BigRational::parse("4/3") == BigRational(BigInt(4), BigInt(3)));
    CHECK(BigRational::parse("-7") == BigRational(-7));
    CHECK(BigRational::parse("0.25") == BigRational(BigInt(1), BigInt(4)));
    CHECK(BigRational::parse("1e-12") == BigRational(BigInt(1), BigInt("1000000000000")));
    CHECK(BigRational::parse("-1.5E3") == BigRational(-1500));
    CHECK(BigRational::parse(".5") == BigRational(BigInt(1), BigInt(2)));
    CHECK_THROWS_AS(BigRational::parse("abc"), ArgumentError);
    CHECK_THROWS_AS(BigRational::parse("1/0"), ArgumentError);
    CHECK(BigRational::parse("007/010") == BigRational(BigInt(7), BigInt(10)));
    CHECK_THROWS_AS(BigRational::parse(""), ArgumentError);
    CHECK_THROWS_AS(BigRational::parse("."), ArgumentError);
}

TEST_CASE("decimal rendering follows %.15g")
{
    CHECK(BigRational(BigInt(25), BigInt(31)).to_decimal() == "0.806451612903226");
    CHECK(BigRational(0).to_decimal() == "0");
    CHECK(BigRational(BigInt(1), BigInt(100000)).to_decimal() == "1e-05");
    CHECK(BigRational(BigInt(-750), BigInt(31)).to_decimal() == "-24.1935483870968");
    CHECK(BigRational(BigInt("1000000000000000"), BigInt(1)).to_decimal() == "1e+15");
    CHECK(BigRational(BigInt(2), BigInt(3)).to_decimal(3) == "0.667");

    // Dyadic values are exact doubles, so printf is an independent oracle.
    testing::Gen gen(7);
    for (int i = 0; i < 500; ++i) {
        const long num = gen.integer(-1000000000, 1000000000);
        const long shift = gen.integer(0, 60);
        const BigRational q = BigRational(num) / pow(BigRational(2), shift);
        CHECK(q.to_decimal() == printf_g15(q.to_double()));
    }
}

TEST_CASE("field axioms on random rationals")
{
    testing::Gen gen(11);
    for (int i = 0; i < 200; ++i) {
        const BigRational a = gen.rational(), b = gen.rational(), c = gen.nonzero_rational();
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a / c) * c == a);
        CHECK(a - a == BigRational(0));
        CHECK(gcd(a.numerator(), a.denominator()) == 1);
        CHECK(a.denominator() > 0);
    }
}

TEST_CASE("integer powers")
{
    const BigRational half(BigInt(1), BigInt(2));
    CHECK(pow(half, 3) == BigRational(BigInt(1), BigInt(8)));
    CHECK(pow(half, -3) == BigRational(8));
    CHECK(pow(BigRational(5), 0) == BigRational(1));
    CHECK_THROWS_AS(pow(BigRational(0), -1), DomainError);
    CHECK_THROWS_AS(BigRational(0).reciprocal(), DomainError);
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), DomainError);
}

TEST_CASE("ordering")
{
    CHECK(BigRational(BigInt(1), BigInt(3)) < BigRational(BigInt(1), BigInt(2)));
    CHECK(BigRational(-2) < BigRational(BigInt(-3), BigInt(2)));
    CHECK(abs(BigRational(-4)) == BigRational(4));
}
