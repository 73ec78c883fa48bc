#include <doctest.h>

#include "generators.hpp"
#include "padic/core.hpp"
#include "padic/errors.hpp"

using namespace padic;

namespace {

BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }

// Digits of a unit a/b by brute force: the residue r mod p^N with b*r = a, found by search.
std::vector<long> brute_digits(long a, long b, long p, long n)
{
    long modulus = 1;
    for (long i = 0; i < n; ++i) modulus *= p;
    long r = 0;
    while (((b * r - a) % modulus + modulus) % modulus != 0) ++r;
    std::vector<long> digits;
    for (long i = 0; i < n; ++i) {
        digits.push_back(r % p);
        r /= p;
    }
    return digits;
}

} // namespace

TEST_CASE("primes")
{
    CHECK(is_prime(2));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(Prime(4), ArgumentError);
    CHECK_THROWS_AS(Prime(-5), ArgumentError);
}

TEST_CASE("valuation examples")
{
    CHECK(valuation(q(114514), Prime(2)).value() == 1);
    CHECK(valuation(q(1919, 810), Prime(5)).value() == -1);
    CHECK(valuation(q(1), Prime(7)).value() == 0);
    CHECK(valuation(q(0), Prime(7)).is_infinite());
    CHECK_THROWS_AS(valuation(q(0), Prime(7)).value(), DomainError);
}

TEST_CASE("norm examples")
{
    CHECK(padic_norm(q(114514), Prime(2)) == q(1, 2));
    CHECK(padic_norm(q(0), Prime(5)) == q(0));
    CHECK(padic_norm(q(1919, 810), Prime(5)) == q(5));
}

TEST_CASE("p-adic integers")
{
    CHECK(is_p_integer(q(7), Prime(5)));
    CHECK_FALSE(is_p_integer(q(1, 5), Prime(5)));
    CHECK(is_p_integer(q(10, 3), Prime(5)));
    CHECK(is_p_integer(q(0), Prime(5)));
}

TEST_CASE("expansion examples")
{
    const PAdicApprox a = expand_rational(q(4, 3), Prime(5), 3);
    CHECK(a.valuation() == 0);
    CHECK(a.digits() == std::vector<long>{3, 3, 1});

    const PAdicApprox one = expand_rational(q(1), Prime(5), 1);
    CHECK(one.digits() == std::vector<long>{1});

    CHECK(expand_rational(q(1, 2), Prime(5), 3).digits() == std::vector<long>{3, 2, 2});
    CHECK(expand_rational(q(0), Prime(5), 3).is_zero());

    const PAdicApprox frac = expand_rational(q(7, 50), Prime(5), 4);
    CHECK(frac.valuation() == -2);
    CHECK(frac.digits().front() != 0);
    CHECK_THROWS_AS(expand_rational(q(1), Prime(5), 0), ArgumentError);
}

TEST_CASE("expansion agrees with brute-force residue search")
{
    testing::Gen gen(3);
    for (long p : {2L, 3L, 5L, 7L}) {
        for (int i = 0; i < 40; ++i) {
            long a = gen.integer(1, 500), b = gen.integer(1, 500);
            while (a % p == 0) ++a;
            while (b % p == 0) ++b;
            const long n = gen.integer(1, 5);
            CHECK(expand_rational(q(a, b), Prime(p), n).digits() == brute_digits(a, b, p, n));
        }
    }
}

TEST_CASE("arithmetic examples")
{
    const Prime p(5);
    CHECK((expand_rational(q(4, 3), p, 3) + expand_rational(q(-4, 3), p, 3)).is_zero());
    CHECK(expand_rational(q(1, 2), p, 3) * expand_rational(q(2), p, 3) == expand_rational(q(1), p, 3));
    CHECK(expand_rational(q(1, 2), p, 3) + expand_rational(q(1, 2), p, 3) == expand_rational(q(1), p, 3));
    CHECK(-expand_rational(q(1), p, 3) == expand_rational(q(-1), p, 3));
    CHECK_THROWS_AS(expand_rational(q(1), p, 3) + expand_rational(q(1), Prime(3), 3), ArgumentError);
}

TEST_CASE("digit validation")
{
    CHECK_THROWS_AS(PAdicApprox(Prime(5), 0, {0, 1}), ArgumentError);
    CHECK_THROWS_AS(PAdicApprox(Prime(5), 0, {5}), ArgumentError);
    CHECK_THROWS_AS(PAdicApprox(Prime(5), 0, {}), ArgumentError);
    CHECK(PAdicApprox(Prime(5), 2, {1}).partial_sum() == q(25));
}

TEST_CASE("norm is multiplicative")
{
    testing::Gen gen(101);
    for (int i = 0; i < 300; ++i) {
        const Prime p = gen.prime();
        const BigRational a = gen.rational(), b = gen.rational();
        CHECK(padic_norm(a * b, p) == padic_norm(a, p) * padic_norm(b, p));
    }
}

TEST_CASE("norm is ultrametric")
{
    testing::Gen gen(102);
    for (int i = 0; i < 300; ++i) {
        const Prime p = gen.prime();
        const BigRational a = gen.rational() * pow_p(p, gen.integer(-3, 3));
        const BigRational b = gen.rational() * pow_p(p, gen.integer(-3, 3));
        const BigRational na = padic_norm(a, p), nb = padic_norm(b, p);
        CHECK(padic_norm(a + b, p) <= std::max(na, nb));
        if (na != nb) CHECK(padic_norm(a + b, p) == std::max(na, nb));
    }
}

TEST_CASE("expansion round trip")
{
    testing::Gen gen(103);
    for (int i = 0; i < 300; ++i) {
        const Prime p = gen.prime();
        const BigRational x = gen.unit(p);
        const long n = gen.integer(1, 12);
        const PAdicApprox e = expand_rational(x, p, n);
        CHECK(e.valuation() == 0);
        CHECK(padic_norm(x - e.partial_sum(), p) <= pow_p(p, -n));
    }
}

TEST_CASE("arithmetic agrees with expansion of the exact result")
{
    testing::Gen gen(104);
    for (int i = 0; i < 300; ++i) {
        const Prime p = gen.prime();
        const BigRational a = gen.nonzero_rational(1000) * pow_p(p, gen.integer(-2, 2));
        const BigRational b = gen.nonzero_rational(1000) * pow_p(p, gen.integer(-2, 2));
        const long n = gen.integer(2, 8);
        const PAdicApprox ea = expand_rational(a, p, n), eb = expand_rational(b, p, n);

        const PAdicApprox prod = ea * eb;
        CHECK(padic_norm(prod.partial_sum() - a * b, p) <= pow_p(p, -prod.absolute_precision()));

        const PAdicApprox sum = ea + eb;
        CHECK(padic_norm(sum.partial_sum() - (a + b), p) <= pow_p(p, -sum.absolute_precision()));
        if (!(a + b).is_zero() && !sum.is_zero()) CHECK(sum.valuation() == valuation(a + b, p).value());

        const PAdicApprox neg = -ea;
        CHECK(padic_norm(neg.partial_sum() + a, p) <= pow_p(p, -neg.absolute_precision()));
    }
}

TEST_CASE("shell classification")
{
    testing::Gen gen(105);
    for (int i = 0; i < 300; ++i) {
        const Prime p = gen.prime();
        const BigRational x = gen.nonzero_rational() * pow_p(p, gen.integer(-4, 4));
        const long n = valuation(x, p).value();
        // x in p^n Z_p but not in p^(n+1) Z_p
        CHECK(is_p_integer(x / pow_p(p, n), p));
        CHECK_FALSE(is_p_integer(x / pow_p(p, n + 1), p));
        CHECK(is_p_integer(x, p) == (n >= 0));
        CHECK(padic_norm(x, p) == pow_p(p, -n));
    }
}
