#include "padic/vladimirov.hpp"

#include <algorithm>
#include <string>

#include "padic/errors.hpp"

namespace padic {

namespace {

constexpr long kMaxShellTerms = 100000;

void require_order(long alpha)
{
    if (alpha < 1) throw ArgumentError("derivative order must be a positive integer, got " + std::to_string(alpha));
}

// Gamma_p(n+1) / Gamma_p(n-alpha+1) for any integer n where it is defined.
BigRational monomial_coefficient(const Prime& p, long alpha, long n)
{
    if (n == alpha)
        throw ResonanceError("resonant index n = alpha = " + std::to_string(n) + ": Gamma_p(1) = 0 in the denominator");
    if (n - alpha + 1 == 0) throw DomainError("Gamma_p(0) is undefined (n = alpha - 1 = " + std::to_string(n) + ")");
    if (n + 1 == 0) throw DomainError("Gamma_p(0) is undefined (n = -1)");
    return gamma_p(p, n + 1) / gamma_p(p, n - alpha + 1);
}

BigRational inverse_gamma_neg(const Prime& p, long alpha)
{
    return gamma_p(p, -alpha).reciprocal();
}

// (p - 1) / (p - p^e)
BigRational geometric_factor(const Prime& p, long e)
{
    const BigRational den = p.as_rational() - pow_p(p, e);
    if (den.is_zero()) throw ResonanceError("degenerate index: p - p^" + std::to_string(e) + " = 0");
    return (p.as_rational() - 1) / den;
}

} // namespace

BigRational gamma_p(const Prime& p, long x)
{
    if (x == 0) throw DomainError("Gamma_p(0) is undefined");
    return (BigRational(1) - pow_p(p, x - 1)) / (BigRational(1) - pow_p(p, -x));
}

MonomialImage d_alpha_monomial(const Prime& p, long alpha, long n)
{
    require_order(alpha);
    if (n < 1) throw ArgumentError("monomial exponent must be positive, got " + std::to_string(n));
    return {monomial_coefficient(p, alpha, n), n - alpha, n >= alpha};
}

RadialFunction basis_function(const Prime& p, BasisTerm term)
{
    auto rule = [p, n = term.n](long k) { return pow_p(p, k * n); };
    switch (term.kind) {
    case BasisTerm::Kind::FInside: return RadialFunction(rule, std::nullopt, 0);
    case BasisTerm::Kind::GOutside: return RadialFunction(rule, 1, std::nullopt);
    default: return RadialFunction(rule);
    }
}

BigRational PiecewiseRadial::evaluate(long shell) const
{
    BigRational total;
    for (const auto& term : shell <= 0 ? inside_ : outside_) {
        BigRational value = term.coefficient * pow_p(p_, shell * term.exponent);
        if (term.log_power != 0) value *= pow(BigRational(shell), term.log_power);
        total += value;
    }
    return total;
}

BigRational PiecewiseRadial::coefficient(bool inside_branch, long exponent, long log_power) const
{
    BigRational total;
    for (const auto& term : inside_branch ? inside_ : outside_)
        if (term.exponent == exponent && term.log_power == log_power) total += term.coefficient;
    return total;
}

PiecewiseRadial d_alpha_f(const Prime& p, long alpha, long n)
{
    require_order(alpha);
    if (n < 0) throw ArgumentError("f_n needs n >= 0, got " + std::to_string(n));
    if (n == alpha) throw ResonanceError("resonant index n = alpha = " + std::to_string(n) + " for f_n");

    const BigRational k = inverse_gamma_neg(p, alpha);
    std::vector<PowerTerm> inside;
    if (n > 0 && n != alpha - 1) inside.push_back({n - alpha, monomial_coefficient(p, alpha, n)});
    inside.push_back({0, k * geometric_factor(p, alpha + 1 - n)});

    std::vector<PowerTerm> outside{{-(alpha + 1), k * geometric_factor(p, -n)}};
    return {p, std::move(inside), std::move(outside), false};
}

PiecewiseRadial d_alpha_g(const Prime& p, long alpha, long n)
{
    require_order(alpha);
    if (n == alpha) throw ResonanceError("resonant index n = alpha = " + std::to_string(n) + " for g_n");

    const BigRational k = inverse_gamma_neg(p, alpha);
    std::vector<PowerTerm> inside{{0, -k * geometric_factor(p, alpha + 1 - n)}};

    std::vector<PowerTerm> outside;
    if (n == -1) {
        const BigRational pr = p.as_rational();
        const BigRational unit = BigRational(1) - pr.reciprocal();
        const BigRational constant =
            unit * ((pow_p(p, alpha + 1) - 1).reciprocal() - (pow_p(p, alpha) - 1).reciprocal()) - 1;
        outside.push_back({-(alpha + 1), k * constant});
        outside.push_back({-(alpha + 1), k * unit, 1});
        return {p, std::move(inside), std::move(outside), false};
    }
    if (n != 0 && n != alpha - 1) outside.push_back({n - alpha, monomial_coefficient(p, alpha, n)});
    outside.push_back({-(alpha + 1), -k * geometric_factor(p, -n)});
    return {p, std::move(inside), std::move(outside), n >= alpha};
}

PiecewiseRadial d_alpha(const Prime& p, long alpha, BasisTerm term)
{
    switch (term.kind) {
    case BasisTerm::Kind::FInside: return d_alpha_f(p, alpha, term.n);
    case BasisTerm::Kind::GOutside: return d_alpha_g(p, alpha, term.n);
    default: break;
    }
    require_order(alpha);
    if (term.n == 0) return {p, {}, {}, false};
    const BigRational c = monomial_coefficient(p, alpha, term.n);
    const bool continued = term.n >= alpha || term.n <= -1;
    return {p, {{term.n - alpha, c}}, {{term.n - alpha, c}}, continued};
}

SeriesSum d_alpha_oracle(const Prime& p, long alpha, const RadialFunction& f, long t, const BigRational& tail_tol)
{
    require_order(alpha);
    const BigRational k = inverse_gamma_neg(p, alpha);
    const BigRational side_tol = tail_tol / (2 * k.abs());
    const BigRational ft = f(t);
    const BigRational near_kernel = pow_p(p, -t * (alpha + 1));

    auto outer = [&](long s) { return (f(s) - ft) * pow_p(p, -s * (alpha + 1)) * shell_measure(p, s); };
    auto inner = [&](long s) { return (f(s) - ft) * near_kernel * shell_measure(p, s); };

    long top = t;
    long bottom = t;
    for (long b : f.breakpoints()) {
        top = std::max(top, b);
        bottom = std::min(bottom, b);
    }

    // the f(t) part decays like p^-alpha upward and like the shell measure downward
    const DirectedSum up = sum_shells(outer, t + 1, +1, top, side_tol, kMaxShellTerms, pow_p(p, -alpha));
    const DirectedSum down = sum_shells(inner, t - 1, -1, bottom, side_tol, kMaxShellTerms, p.as_rational().reciprocal());

    SeriesSum out;
    out.value = k * (up.value + down.value);
    out.tail_bound = k.abs() * (up.tail_bound + down.tail_bound);
    out.window = {down.last, up.last};
    out.terms = up.terms + down.terms;
    return out;
}

BigRational d_alpha_shell_sum(const Prime& p, long alpha, const RadialFunction& f, long t, ShellWindow window)
{
    require_order(alpha);
    const BigRational ft = f(t);
    const BigRational near_kernel = pow_p(p, -t * (alpha + 1));
    BigRational total;
    for (long s = window.lo; s <= window.hi; ++s) {
        if (s == t) continue;
        const BigRational kernel = s > t ? pow_p(p, -s * (alpha + 1)) : near_kernel;
        total += (f(s) - ft) * kernel * shell_measure(p, s);
    }
    return inverse_gamma_neg(p, alpha) * total;
}

bool semigroup_check(const Prime& p, long alpha, long beta, long n)
{
    require_order(alpha);
    require_order(beta);
    if (n < 1) throw ArgumentError("monomial exponent must be positive, got " + std::to_string(n));
    try {
        const BigRational first = monomial_coefficient(p, beta, n);
        const BigRational second = monomial_coefficient(p, alpha, n - beta);
        const BigRational direct = monomial_coefficient(p, alpha + beta, n);
        return first * second == direct;
    } catch (const DomainError& e) {
        throw InconclusiveError(std::string("semigroup check inconclusive: ") + e.what());
    }
}

} // namespace padic
