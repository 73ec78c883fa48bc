#include "padic/big_rational.hpp"

#include <ostream>
#include <regex>

#include "padic/errors.hpp"

namespace padic {

namespace {

BigInt pow10(unsigned long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text)
{
    static const std::regex fraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
    static const std::regex decimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");

    const std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, fraction)) {
        const BigInt den(m[2].str(), 10);
        if (den == 0) throw ArgumentError("zero denominator in '" + s + "'");
        std::string num = m[1].str();
        if (!num.empty() && num.front() == '+') num.erase(0, 1);
        return {BigInt(num, 10), den};
    }
    if (std::regex_match(s, m, decimal)) {
        const std::string whole = m[2].str();
        const std::string frac = m[3].str();
        if (whole.empty() && frac.empty()) throw ArgumentError("not a number: '" + s + "'");
        const std::string digits = whole + frac;
        long exponent = -static_cast<long>(frac.size());
        if (m[4].matched) {
            try {
                exponent += std::stol(m[4].str());
            } catch (const std::exception&) {
                throw ArgumentError("exponent out of range in '" + s + "'");
            }
        }
        if (exponent > 100000 || exponent < -100000) throw ArgumentError("exponent out of range in '" + s + "'");
        BigInt mantissa(digits, 10);
        if (m[1].str() == "-") mantissa = -mantissa;
        if (exponent >= 0) return BigRational(BigInt(mantissa * pow10(static_cast<unsigned long>(exponent))));
        return {mantissa, pow10(static_cast<unsigned long>(-exponent))};
    }
    throw ArgumentError("not a rational or decimal number: '" + s + "'");
}

BigRational BigRational::abs() const
{
    BigRational r;
    r.value_ = ::abs(value_);
    return r;
}

BigRational BigRational::reciprocal() const
{
    if (is_zero()) throw DomainError("reciprocal of zero");
    BigRational r;
    mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

std::string BigRational::to_string() const
{
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string BigRational::to_decimal(int significant) const
{
    if (significant < 1) significant = 1;
    if (is_zero()) return "0";

    const BigInt num = ::abs(value_.get_num());
    const BigInt den = value_.get_den();

    // 10^e <= |q| < 10^(e+1); sizeinbase may overshoot by one.
    long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
    auto at_least_pow10 = [&](long k) {
        // |q| >= 10^k  <=>  num * 10^-k >= den
        if (k >= 0) return num >= den * pow10(static_cast<unsigned long>(k));
        return num * pow10(static_cast<unsigned long>(-k)) >= den;
    };
    while (!at_least_pow10(e)) --e;
    while (at_least_pow10(e + 1)) ++e;

    // mantissa = round(|q| * 10^(significant-1-e)), ties to even as printf does
    const long shift = significant - 1 - e;
    BigInt scaled_num = num;
    BigInt scaled_den = den;
    if (shift >= 0) scaled_num *= pow10(static_cast<unsigned long>(shift));
    else scaled_den *= pow10(static_cast<unsigned long>(-shift));
    BigInt mantissa = scaled_num / scaled_den;
    const BigInt twice_rest = 2 * (scaled_num - mantissa * scaled_den);
    if (twice_rest > scaled_den || (twice_rest == scaled_den && mpz_odd_p(mantissa.get_mpz_t()))) ++mantissa;
    if (mantissa == pow10(static_cast<unsigned long>(significant))) {
        mantissa = pow10(static_cast<unsigned long>(significant - 1));
        ++e;
    }
    std::string digits = mantissa.get_str();

    std::string out = sign() < 0 ? "-" : "";
    auto trim = [](std::string s) {
        if (s.find('.') == std::string::npos) return s;
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    };

    if (e < -4 || e >= significant) {
        std::string m = digits.substr(0, 1);
        if (digits.size() > 1) m += "." + digits.substr(1);
        out += trim(m);
        const long ae = e < 0 ? -e : e;
        out += e < 0 ? "e-" : "e+";
        if (ae < 10) out += "0";
        out += std::to_string(ae);
        return out;
    }
    if (e >= 0) {
        std::string m = digits.substr(0, static_cast<std::size_t>(e + 1));
        const std::string rest = digits.substr(static_cast<std::size_t>(e + 1));
        if (!rest.empty()) m += "." + rest;
        return out + trim(m);
    }
    std::string m = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    return out + trim(m);
}

BigRational& BigRational::operator+=(const BigRational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs)
{
    if (rhs.is_zero()) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

BigRational BigRational::operator-() const
{
    BigRational r;
    r.value_ = -value_;
    return r;
}

BigRational pow(const BigRational& base, long exponent)
{
    if (exponent == 0) return BigRational(1);
    if (base.is_zero()) {
        if (exponent < 0) throw DomainError("zero raised to a negative power");
        return BigRational(0);
    }
    const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(), e);
    if (exponent < 0) std::swap(num, den);
    return {num, den};
}

std::ostream& operator<<(std::ostream& os, const BigRational& q)
{
    return os << q.to_string();
}

} // namespace padic
