#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace padic {

using BigInt = mpz_class;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Thin value wrapper over GMP's mpq. The representation is always canonical:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
class BigRational {
public:
    BigRational() = default;

    template <std::signed_integral T>
    BigRational(T v) : value_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    BigRational(T v) : value_(static_cast<unsigned long>(v)) {}

    BigRational(const BigInt& v) : value_(v) {}

    /// num/den in lowest terms. Throws DomainError when den is zero.
    BigRational(const BigInt& num, const BigInt& den);

    /// Accepts "a/b", integers and finite decimals ("0.25", "-1.5e-12").
    /// Decimal input is converted exactly. Throws ArgumentError on anything else.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    BigRational abs() const;
    BigRational reciprocal() const;

    /// "a/b", or "a" when the denominator is 1.
    std::string to_string() const;

    /// Decimal rendering with the given number of significant digits, formatted like printf("%.*g").
    std::string to_decimal(int significant = 15) const;

    double to_double() const { return value_.get_d(); }

    const mpq_class& mpq() const { return value_; }

    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
    friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
    friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
    friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

/// base^exponent for any integer exponent. Zero to a negative power throws DomainError.
BigRational pow(const BigRational& base, long exponent);

std::ostream& operator<<(std::ostream& os, const BigRational& q);

inline BigRational abs(const BigRational& q) { return q.abs(); }

} // namespace padic
