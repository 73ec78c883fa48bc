#pragma once

#include <limits>
#include <vector>

#include "padic/big_rational.hpp"

namespace padic {

bool is_prime(long n);

/// A validated prime modulus.
class Prime {
public:
    /// Throws ArgumentError unless value is prime.
    explicit Prime(long value);

    long value() const noexcept { return value_; }
    BigRational as_rational() const { return BigRational(value_); }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    long value_;
};

/// p^exponent as an exact rational.
BigRational pow_p(const Prime& p, long exponent);

/// The p-adic valuation: an integer, or +infinity for zero.
class Valuation {
public:
    explicit Valuation(long value) : value_(value), infinite_(false) {}
    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const noexcept { return infinite_; }
    /// Throws DomainError for the valuation of zero.
    long value() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;

private:
    Valuation() : value_(0), infinite_(true) {}

    long value_;
    bool infinite_;
};

/// The exponent gamma with q = p^gamma * m/n, m and n coprime to p.
Valuation valuation(const BigRational& q, const Prime& p);

/// |q|_p = p^-valuation(q), and 0 for q = 0.
BigRational padic_norm(const BigRational& q, const Prime& p);

/// |q|_p <= 1.
bool is_p_integer(const BigRational& q, const Prime& p);

/// A p-adic number known to finite absolute precision.
///
/// A nonzero value stands for p^gamma * (d_0 + d_1 p + ... + d_{N-1} p^{N-1}) modulo p^{gamma+N},
/// with 0 <= d_k < p and d_0 > 0, so its norm is exactly p^-gamma. Zero carries no digits;
/// it records the absolute precision to which it is known to vanish (kExact for an exact zero).
class PAdicApprox {
public:
    static constexpr long kExact = std::numeric_limits<long>::max();

    /// Throws ArgumentError on out-of-range digits, a zero leading digit or an empty digit list.
    PAdicApprox(Prime p, long valuation, std::vector<long> digits);

    static PAdicApprox zero(Prime p, long absolute_precision = kExact);

    const Prime& prime() const noexcept { return prime_; }
    bool is_zero() const noexcept { return zero_; }

    /// Throws DomainError for zero.
    long valuation() const;
    const std::vector<long>& digits() const noexcept { return digits_; }
    /// Number of known digits N (0 for zero).
    long precision() const noexcept { return static_cast<long>(digits_.size()); }
    /// gamma + N: the value is determined modulo p^absolute_precision().
    long absolute_precision() const noexcept;

    /// p^gamma * sum d_k p^k as an exact rational.
    BigRational partial_sum() const;

    friend bool operator==(const PAdicApprox&, const PAdicApprox&) = default;

private:
    PAdicApprox(Prime p, long zero_precision);

    Prime prime_;
    bool zero_ = false;
    long valuation_ = 0;
    long zero_precision_ = 0;
    std::vector<long> digits_;
};

/// First N digits of the p-adic expansion of q. q = 0 gives the exact zero.
PAdicApprox expand_rational(const BigRational& q, const Prime& p, long digits);

/// Digit-carry arithmetic. Results carry the precision they can guarantee; mismatched primes
/// throw ArgumentError.
PAdicApprox padic_add(const PAdicApprox& a, const PAdicApprox& b);
PAdicApprox padic_mul(const PAdicApprox& a, const PAdicApprox& b);
PAdicApprox padic_neg(const PAdicApprox& a);

inline PAdicApprox operator+(const PAdicApprox& a, const PAdicApprox& b) { return padic_add(a, b); }
inline PAdicApprox operator*(const PAdicApprox& a, const PAdicApprox& b) { return padic_mul(a, b); }
inline PAdicApprox operator-(const PAdicApprox& a) { return padic_neg(a); }

} // namespace padic
