#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "padic/big_rational.hpp"
#include "padic/core.hpp"
#include "padic/shell_series.hpp"

namespace padic {

/// A function of |x|_p alone, given by its value on each shell |x|_p = p^k.
///
/// Outside the optional support bounds [k_min, k_max] the value is 0. The bounds double as
/// the breakpoints after which shell series are expected to settle into geometric decay.
class RadialFunction {
public:
    using Rule = std::function<BigRational(long shell)>;

    explicit RadialFunction(Rule rule, std::optional<long> k_min = std::nullopt, std::optional<long> k_max = std::nullopt);

    static RadialFunction zero();
    static RadialFunction constant(BigRational c);
    /// |x|_p^s on all of Q_p.
    static RadialFunction power(const Prime& p, long s);

    BigRational operator()(long shell) const;

    const std::optional<long>& k_min() const noexcept { return k_min_; }
    const std::optional<long>& k_max() const noexcept { return k_max_; }
    /// Shells where this function or any summand it was built from switches form (support edges).
    const std::vector<long>& breakpoints() const noexcept { return breakpoints_; }

    friend RadialFunction operator+(const RadialFunction& f, const RadialFunction& g);
    friend RadialFunction operator*(const BigRational& a, const RadialFunction& f);

private:
    Rule rule_;
    std::optional<long> k_min_;
    std::optional<long> k_max_;
    std::vector<long> breakpoints_;
};

/// Integration domains built from whole shells.
class ShellRegion {
public:
    enum class Kind { Shell, Ball, Complement, Whole };

    /// {|x|_p = p^gamma}
    static ShellRegion shell(long gamma) { return {Kind::Shell, gamma}; }
    /// p^m Z_p, i.e. shells k <= -m
    static ShellRegion ball(long m) { return {Kind::Ball, m}; }
    /// Q_p \ Z_p, i.e. shells k >= 1
    static ShellRegion complement() { return {Kind::Complement, 0}; }
    static ShellRegion whole() { return {Kind::Whole, 0}; }

    Kind kind() const noexcept { return kind_; }
    long parameter() const noexcept { return parameter_; }

    std::optional<long> lowest_shell() const;
    std::optional<long> highest_shell() const;
    bool contains(long shell) const;

private:
    ShellRegion(Kind kind, long parameter) : kind_(kind), parameter_(parameter) {}

    Kind kind_;
    long parameter_;
};

/// Haar measure of the shell |x|_p = p^gamma: p^gamma (1 - 1/p).
BigRational shell_measure(const Prime& p, long gamma);

/// Haar measure of the ball p^m Z_p: p^-m.
BigRational ball_measure(const Prime& p, long m);

/// Integral of |x|_p^s over Z_p, (p - 1) / (p - p^-s). Requires s > -1.
BigRational moment_zp(const Prime& p, long s);

/// Integral of |x|_p^s over Q_p \ Z_p, -(p - 1) / (p - p^-s). Requires s < -1.
BigRational moment_complement(const Prime& p, long s);

/// Shell-sum oracle: sum of f(p^k) * shell_measure(p, k) over the shells of `region`,
/// truncated once the estimated tail drops below `tail_tol`.
SeriesSum integrate_radial(const Prime& p, const RadialFunction& f, const ShellRegion& region, const BigRational& tail_tol);

/// The same shell sum restricted to an explicit window (exact, no truncation logic).
BigRational integrate_radial_window(const Prime& p, const RadialFunction& f, const ShellRegion& region, ShellWindow window);

} // namespace padic
