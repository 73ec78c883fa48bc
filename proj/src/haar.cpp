#include "padic/haar.hpp"

#include <algorithm>
#include <string>

#include "padic/errors.hpp"

namespace padic {

namespace {

std::optional<long> union_lower(const std::optional<long>& a, const std::optional<long>& b)
{
    if (!a || !b) return std::nullopt;
    return std::min(*a, *b);
}

std::optional<long> union_upper(const std::optional<long>& a, const std::optional<long>& b)
{
    if (!a || !b) return std::nullopt;
    return std::max(*a, *b);
}

} // namespace

RadialFunction::RadialFunction(Rule rule, std::optional<long> k_min, std::optional<long> k_max)
    : rule_(std::move(rule)), k_min_(k_min), k_max_(k_max)
{
    if (!rule_) throw ArgumentError("radial function without an evaluation rule");
    if (k_min_ && k_max_ && *k_min_ > *k_max_) throw ArgumentError("radial function support is empty");
    if (k_min_) breakpoints_.push_back(*k_min_);
    if (k_max_) breakpoints_.push_back(*k_max_);
}

RadialFunction RadialFunction::zero()
{
    return RadialFunction([](long) { return BigRational(0); });
}

RadialFunction RadialFunction::constant(BigRational c)
{
    return RadialFunction([c = std::move(c)](long) { return c; });
}

RadialFunction RadialFunction::power(const Prime& p, long s)
{
    return RadialFunction([p, s](long k) { return pow_p(p, k * s); });
}

BigRational RadialFunction::operator()(long shell) const
{
    if ((k_min_ && shell < *k_min_) || (k_max_ && shell > *k_max_)) return BigRational(0);
    return rule_(shell);
}

RadialFunction operator+(const RadialFunction& f, const RadialFunction& g)
{
    RadialFunction out([f, g](long k) { return f(k) + g(k); }, union_lower(f.k_min_, g.k_min_),
                       union_upper(f.k_max_, g.k_max_));
    out.breakpoints_ = f.breakpoints_;
    out.breakpoints_.insert(out.breakpoints_.end(), g.breakpoints_.begin(), g.breakpoints_.end());
    std::sort(out.breakpoints_.begin(), out.breakpoints_.end());
    out.breakpoints_.erase(std::unique(out.breakpoints_.begin(), out.breakpoints_.end()), out.breakpoints_.end());
    return out;
}

RadialFunction operator*(const BigRational& a, const RadialFunction& f)
{
    RadialFunction out([a, f](long k) { return a * f(k); }, f.k_min_, f.k_max_);
    out.breakpoints_ = f.breakpoints_;
    return out;
}

std::optional<long> ShellRegion::lowest_shell() const
{
    switch (kind_) {
    case Kind::Shell: return parameter_;
    case Kind::Complement: return 1;
    default: return std::nullopt;
    }
}

std::optional<long> ShellRegion::highest_shell() const
{
    switch (kind_) {
    case Kind::Shell: return parameter_;
    case Kind::Ball: return -parameter_;
    case Kind::Complement: return std::nullopt;
    default: return std::nullopt;
    }
}

bool ShellRegion::contains(long shell) const
{
    const auto lo = lowest_shell();
    const auto hi = highest_shell();
    return (!lo || shell >= *lo) && (!hi || shell <= *hi);
}

BigRational shell_measure(const Prime& p, long gamma)
{
    return pow_p(p, gamma) - pow_p(p, gamma - 1);
}

BigRational ball_measure(const Prime& p, long m)
{
    return pow_p(p, -m);
}

BigRational moment_zp(const Prime& p, long s)
{
    if (s <= -1) throw DomainError("moment over Z_p needs s > -1, got s = " + std::to_string(s));
    return (p.as_rational() - 1) / (p.as_rational() - pow_p(p, -s));
}

BigRational moment_complement(const Prime& p, long s)
{
    if (s >= -1) throw DomainError("moment over Q_p \\ Z_p needs s < -1, got s = " + std::to_string(s));
    return -(p.as_rational() - 1) / (p.as_rational() - pow_p(p, -s));
}

SeriesSum integrate_radial(const Prime& p, const RadialFunction& f, const ShellRegion& region, const BigRational& tail_tol)
{
    auto term = [&](long k) { return f(k) * shell_measure(p, k); };
    SeriesSum out;

    if (region.kind() == ShellRegion::Kind::Shell) {
        out.value = term(region.parameter());
        out.window = {region.parameter(), region.parameter()};
        out.terms = 1;
        return out;
    }

    const auto lo = region.lowest_shell();
    const auto hi = region.highest_shell();

    // Breakpoints past which the summand is a fixed combination of geometric sequences.
    long top = hi ? *hi : 0;
    long bottom = lo ? *lo : 0;
    for (long b : f.breakpoints()) {
        top = std::max(top, b);
        bottom = std::min(bottom, b);
    }

    const BigRational side_tol = (!lo && !hi) ? tail_tol / 2 : tail_tol;

    if (!lo) {
        // downward sweep from the top of the region
        const long start = hi ? *hi : 0;
        const DirectedSum down = sum_shells(term, start, -1, bottom, side_tol);
        out.value += down.value;
        out.tail_bound += down.tail_bound;
        out.window.lo = down.last;
        out.window.hi = start;
        out.terms += down.terms;
    }
    if (!hi) {
        const long start = lo ? *lo : 1;
        const DirectedSum up = sum_shells(term, start, +1, top, side_tol);
        out.value += up.value;
        out.tail_bound += up.tail_bound;
        if (lo) out.window.lo = start;
        out.window.hi = up.last;
        out.terms += up.terms;
    }
    return out;
}

BigRational integrate_radial_window(const Prime& p, const RadialFunction& f, const ShellRegion& region, ShellWindow window)
{
    BigRational total;
    for (long k = window.lo; k <= window.hi; ++k)
        if (region.contains(k)) total += f(k) * shell_measure(p, k);
    return total;
}

} // namespace padic
