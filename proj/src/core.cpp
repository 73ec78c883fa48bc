#include "padic/core.hpp"

#include <algorithm>
#include <string>

#include "padic/errors.hpp"

namespace padic {

namespace {

BigInt pow_int(long base, long exponent)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
    return r;
}

// Strips every factor p from v (v != 0) and returns how many were removed.
long remove_factor(BigInt& v, long p)
{
    const BigInt pz(p);
    return static_cast<long>(mpz_remove(v.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t()));
}

BigInt digits_to_int(const std::vector<long>& digits, long p)
{
    BigInt r = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) r = r * p + *it;
    return r;
}

// The N low base-p digits of the nonnegative integer u.
std::vector<long> int_to_digits(BigInt u, long p, long n)
{
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(n));
    const BigInt pz(p);
    for (long k = 0; k < n; ++k) {
        BigInt r;
        mpz_fdiv_qr(u.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), pz.get_mpz_t());
        out.push_back(r.get_si());
    }
    return out;
}

long saturating_add(long a, long b)
{
    if (a == PAdicApprox::kExact || b == PAdicApprox::kExact) return PAdicApprox::kExact;
    return a + b;
}

void require_same_prime(const PAdicApprox& a, const PAdicApprox& b)
{
    if (a.prime() != b.prime())
        throw ArgumentError("p-adic operands over different primes: " + std::to_string(a.prime().value()) + " and " +
                            std::to_string(b.prime().value()));
}

// a reduced to absolute precision `abs` (abs <= a.absolute_precision()).
PAdicApprox truncate(const PAdicApprox& a, long abs)
{
    if (a.is_zero()) return PAdicApprox::zero(a.prime(), abs);
    if (a.valuation() >= abs) return PAdicApprox::zero(a.prime(), abs);
    std::vector<long> d(a.digits().begin(), a.digits().begin() + (abs - a.valuation()));
    return {a.prime(), a.valuation(), std::move(d)};
}

} // namespace

bool is_prime(long n)
{
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(long value) : value_(value)
{
    if (!is_prime(value)) throw ArgumentError("not a prime: " + std::to_string(value));
}

BigRational pow_p(const Prime& p, long exponent)
{
    if (exponent >= 0) return BigRational(pow_int(p.value(), exponent));
    return {BigInt(1), pow_int(p.value(), -exponent)};
}

long Valuation::value() const
{
    if (infinite_) throw DomainError("valuation of zero is infinite");
    return value_;
}

Valuation valuation(const BigRational& q, const Prime& p)
{
    if (q.is_zero()) return Valuation::infinity();
    BigInt num = q.numerator();
    BigInt den = q.denominator();
    return Valuation(remove_factor(num, p.value()) - remove_factor(den, p.value()));
}

BigRational padic_norm(const BigRational& q, const Prime& p)
{
    const Valuation v = valuation(q, p);
    if (v.is_infinite()) return BigRational(0);
    return pow_p(p, -v.value());
}

bool is_p_integer(const BigRational& q, const Prime& p)
{
    const Valuation v = valuation(q, p);
    return v.is_infinite() || v.value() >= 0;
}

PAdicApprox::PAdicApprox(Prime p, long valuation, std::vector<long> digits)
    : prime_(p), valuation_(valuation), digits_(std::move(digits))
{
    if (digits_.empty()) throw ArgumentError("a nonzero p-adic approximation needs at least one digit");
    for (long d : digits_)
        if (d < 0 || d >= p.value()) throw ArgumentError("digit " + std::to_string(d) + " out of range for p = " + std::to_string(p.value()));
    if (digits_.front() == 0) throw ArgumentError("leading digit must be nonzero");
}

PAdicApprox::PAdicApprox(Prime p, long zero_precision) : prime_(p), zero_(true), zero_precision_(zero_precision) {}

PAdicApprox PAdicApprox::zero(Prime p, long absolute_precision)
{
    return PAdicApprox(p, absolute_precision);
}

long PAdicApprox::valuation() const
{
    if (zero_) throw DomainError("valuation of a p-adic zero");
    return valuation_;
}

long PAdicApprox::absolute_precision() const noexcept
{
    return zero_ ? zero_precision_ : valuation_ + precision();
}

BigRational PAdicApprox::partial_sum() const
{
    if (zero_) return BigRational(0);
    return BigRational(digits_to_int(digits_, prime_.value())) * pow_p(prime_, valuation_);
}

PAdicApprox expand_rational(const BigRational& q, const Prime& p, long digits)
{
    if (digits < 1) throw ArgumentError("expansion needs at least one digit");
    if (q.is_zero()) return PAdicApprox::zero(p);

    BigInt num = q.numerator();
    BigInt den = q.denominator();
    const long gamma = remove_factor(num, p.value()) - remove_factor(den, p.value());

    // unit part num/den, both coprime to p: a single lift modulo p^N
    const BigInt modulus = pow_int(p.value(), digits);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    BigInt unit = num * inv;
    mpz_mod(unit.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
    return {p, gamma, int_to_digits(unit, p.value(), digits)};
}

PAdicApprox padic_add(const PAdicApprox& a, const PAdicApprox& b)
{
    require_same_prime(a, b);
    const long abs = std::min(a.absolute_precision(), b.absolute_precision());
    if (a.is_zero()) return truncate(b, abs);
    if (b.is_zero()) return truncate(a, abs);

    const long p = a.prime().value();
    const long base = std::min(a.valuation(), b.valuation());
    const long width = abs - base;
    const BigInt modulus = pow_int(p, width);

    BigInt sum = digits_to_int(a.digits(), p) * pow_int(p, a.valuation() - base) +
                 digits_to_int(b.digits(), p) * pow_int(p, b.valuation() - base);
    mpz_mod(sum.get_mpz_t(), sum.get_mpz_t(), modulus.get_mpz_t());
    if (sum == 0) return PAdicApprox::zero(a.prime(), abs);

    const long shift = remove_factor(sum, p);
    return {a.prime(), base + shift, int_to_digits(sum, p, width - shift)};
}

PAdicApprox padic_mul(const PAdicApprox& a, const PAdicApprox& b)
{
    require_same_prime(a, b);
    if (a.is_zero() && b.is_zero()) return PAdicApprox::zero(a.prime(), saturating_add(a.absolute_precision(), b.absolute_precision()));
    if (a.is_zero()) return PAdicApprox::zero(a.prime(), saturating_add(a.absolute_precision(), b.valuation()));
    if (b.is_zero()) return PAdicApprox::zero(a.prime(), saturating_add(b.absolute_precision(), a.valuation()));

    const long p = a.prime().value();
    const long n = std::min(a.precision(), b.precision());
    BigInt product = digits_to_int(a.digits(), p) * digits_to_int(b.digits(), p);
    const BigInt modulus = pow_int(p, n);
    mpz_mod(product.get_mpz_t(), product.get_mpz_t(), modulus.get_mpz_t());
    return {a.prime(), a.valuation() + b.valuation(), int_to_digits(product, p, n)};
}

PAdicApprox padic_neg(const PAdicApprox& a)
{
    if (a.is_zero()) return a;
    const long p = a.prime().value();
    const BigInt modulus = pow_int(p, a.precision());
    BigInt negated = modulus - digits_to_int(a.digits(), p);
    return {a.prime(), a.valuation(), int_to_digits(negated, p, a.precision())};
}

} // namespace padic
