#pragma once

#include <vector>

#include "padic/big_rational.hpp"
#include "padic/core.hpp"
#include "padic/haar.hpp"
#include "padic/shell_series.hpp"

namespace padic {

/// Gamma_p(x) = (1 - p^(x-1)) / (1 - p^-x). Throws DomainError at x = 0.
///
/// Gamma_p(1) = 0 and Gamma_p(x) Gamma_p(1 - x) = 1 wherever both sides are defined.
BigRational gamma_p(const Prime& p, long x);

/// D^alpha |x|^n = coefficient * |x|^exponent.
struct MonomialImage {
    BigRational coefficient;
    long exponent = 0;
    /// The defining integral diverges for this n; the value is the analytic continuation.
    bool analytically_continued = false;
};

/// Gamma_p(n+1) / Gamma_p(n-alpha+1) |x|^(n-alpha) for n >= 1.
/// n = alpha raises ResonanceError; n = alpha - 1 raises DomainError (Gamma_p(0)).
MonomialImage d_alpha_monomial(const Prime& p, long alpha, long n);

/// The piecewise basis: |x|^n on Q_p, f_n = |x|^n on Z_p (0 outside), g_n = |x|^n off Z_p (0 on Z_p).
struct BasisTerm {
    enum class Kind { Monomial, FInside, GOutside };
    Kind kind;
    long n;
};

RadialFunction basis_function(const Prime& p, BasisTerm term);

/// coefficient * |x|_p^exponent * (log_p |x|_p)^log_power
struct PowerTerm {
    long exponent;
    BigRational coefficient;
    long log_power = 0;
};

/// A radial function given by one power sum on Z_p (shells k <= 0) and another off it (k >= 1).
class PiecewiseRadial {
public:
    PiecewiseRadial(Prime p, std::vector<PowerTerm> inside, std::vector<PowerTerm> outside, bool analytically_continued = false)
        : p_(p), inside_(std::move(inside)), outside_(std::move(outside)), continued_(analytically_continued)
    {
    }

    const Prime& prime() const noexcept { return p_; }
    const std::vector<PowerTerm>& inside() const noexcept { return inside_; }
    const std::vector<PowerTerm>& outside() const noexcept { return outside_; }
    bool analytically_continued() const noexcept { return continued_; }

    /// Value on the shell |x|_p = p^shell.
    BigRational evaluate(long shell) const;

    /// Sum of the coefficients attached to |x|^exponent (log_p|x|)^log_power on one branch.
    BigRational coefficient(bool inside_branch, long exponent, long log_power = 0) const;

private:
    Prime p_;
    std::vector<PowerTerm> inside_;
    std::vector<PowerTerm> outside_;
    bool continued_;
};

/// D^alpha f_n (n >= 0) in closed form. At n = alpha - 1 the monomial term drops out
/// (1/Gamma_p has a zero at 0).
PiecewiseRadial d_alpha_f(const Prime& p, long alpha, long n);

/// D^alpha g_n in closed form; n may be negative. Flagged as continued when n >= alpha.
/// For n = -1 the two outside terms merge into |x|^(-alpha-1) (a + b log_p |x|).
PiecewiseRadial d_alpha_g(const Prime& p, long alpha, long n);

/// Closed form for any basis term.
PiecewiseRadial d_alpha(const Prime& p, long alpha, BasisTerm term);

/// The defining singular integral of D^alpha f at |x|_p = p^t, evaluated as two shell sums:
///   (1/Gamma_p(-alpha)) [ sum_{k>t} (f(p^k) - f(p^t)) p^(-k(alpha+1)) mu_k
///                       + sum_{k<t} (f(p^k) - f(p^t)) p^(-t(alpha+1)) mu_k ]
/// with mu_k the shell measure. The k = t shell contributes nothing for radial f.
/// Throws DivergenceError when either sum fails to decay.
SeriesSum d_alpha_oracle(const Prime& p, long alpha, const RadialFunction& f, long t, const BigRational& tail_tol);

/// The same sum restricted to the shells of `window` (exact; used for linearity checks).
BigRational d_alpha_shell_sum(const Prime& p, long alpha, const RadialFunction& f, long t, ShellWindow window);

/// Exact check that D^alpha D^beta |x|^n and D^(alpha+beta) |x|^n carry the same coefficient.
/// Throws InconclusiveError when any stage is resonant or hits Gamma_p(0).
bool semigroup_check(const Prime& p, long alpha, long beta, long n);

} // namespace padic
