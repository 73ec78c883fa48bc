#include "padic/schrodinger.hpp"

#include <algorithm>
#include <string>

#include "padic/errors.hpp"
#include "padic/kernels.hpp"
#include "padic/vladimirov.hpp"

namespace padic {

namespace {

constexpr long kOrder = 2;

bool is_unit(const BigRational& B, int sign) { return B == BigRational(sign); }

void require_unit_coupling(const BigRational& B)
{
    if (!is_unit(B, 1) && !is_unit(B, -1))
        throw UnsupportedError("asymptotics are only known for B = 1 and B = -1, got B = " + B.to_string());
}

// 1 / (p - p^e), or nullopt where the denominator vanishes.
std::optional<BigRational> inverse_gap(const Prime& p, long e)
{
    const BigRational den = p.as_rational() - pow_p(p, e);
    if (den.is_zero()) return std::nullopt;
    return den.reciprocal();
}

struct WeightedSum {
    BigRational value;
    BigRational tail;
};

// sum_i coef[index(i)] * weight[i]; zero coefficients are skipped before the weight is consulted.
template <typename Index>
WeightedSum weighted_sum(const Prime& p, const std::vector<BigRational>& coef,
                         const std::vector<std::optional<BigRational>>& weight, long first, Index index,
                         const char* name)
{
    WeightedSum out;
    BigRational last, before_last;
    for (long i = first; i < first + static_cast<long>(weight.size()); ++i) {
        const long j = index(i);
        before_last = last;
        last = BigRational(0);
        if (j >= static_cast<long>(coef.size()) || coef[j].is_zero()) continue;
        const auto& w = weight[i - first];
        if (!w)
            throw StructuralError(std::string("nonzero coefficient at index ") + std::to_string(j) + " meets a zero denominator in " +
                                  name);
        last = coef[j] * *w;
        out.value += last;
    }
    const BigRational p2 = pow_p(p, 2);
    out.tail = std::max(last.abs(), before_last.abs()) / (p2 - 1);
    return out;
}

} // namespace

void ModelParams::validate() const
{
    if (B.is_zero()) throw UnsupportedError("B = 0 is not supported: the outside recurrence divides by B");
    if (N < 1) throw ArgumentError("truncation N must be positive, got " + std::to_string(N));
}

ConstraintSystem::ConstraintSystem(const Prime& p, BigRational B, long N) : p_(p), B_(std::move(B)), N_(N)
{
    ModelParams{p_, B_, BigRational(0), N_}.validate();

    inverse_gamma_m2_ = gamma_p(p_, -2).reciprocal();

    for (long n = 0; n + 2 <= N_; ++n) inside_ratio_.push_back(gamma_p(p_, 2 * n + 3) / gamma_p(p_, 2 * n + 5));
    outside_ratio_.emplace_back(); // n = 0 unused
    for (long n = 1; n <= N_; ++n) outside_ratio_.push_back(gamma_p(p_, -2 * n) / gamma_p(p_, -2 * n - 2));

    for (long n = 0; n <= N_; ++n) {
        weight_A_.push_back(inverse_gap(p_, -2 * n));
        weight_C_.push_back(inverse_gap(p_, 3 - 2 * n));
    }
    for (long n = 2; n <= N_ + 2; ++n) {
        weight_F_.push_back(inverse_gap(p_, 2 * n + 1));
        weight_D_.push_back(inverse_gap(p_, 2 * n + 4));
    }

}

std::vector<BigRational> ConstraintSystem::tau(const BigRational& E) const
{
    std::vector<BigRational> t(2 * N_ + 1);
    t[0] = 1;
    for (long n = 0; n + 2 <= N_; ++n) t[2 * n + 4] = (E * t[2 * n + 2] - B_ * t[2 * n]) * inside_ratio_[n];
    return t;
}

std::vector<BigRational> ConstraintSystem::s(const BigRational& E) const
{
    std::vector<BigRational> v(2 * N_ + 6);
    v[5] = 1;
    for (long n = 1; n <= N_; ++n) v[2 * n + 5] = (E * v[2 * n + 3] - v[2 * n + 1] * outside_ratio_[n]) / B_;
    return v;
}

ConstraintValues ConstraintSystem::constraints(const BigRational& E) const
{
    return constraints(tau(E), s(E), E);
}

ConstraintValues ConstraintSystem::constraints(const std::vector<BigRational>& tau, const std::vector<BigRational>& s,
                                               const BigRational& E) const
{
    auto even = [](long n) { return 2 * n; };
    auto odd = [](long n) { return 2 * n + 1; };
    const BigRational gamma_over = gamma_p(p_, -2) / (p_.as_rational() - 1);

    const WeightedSum a = weighted_sum(p_, tau, weight_A_, 0, even, "A");
    const WeightedSum c = weighted_sum(p_, tau, weight_C_, 0, even, "C");
    const WeightedSum f = weighted_sum(p_, s, weight_F_, 2, odd, "F");
    const WeightedSum d = weighted_sum(p_, s, weight_D_, 2, odd, "D");

    ConstraintValues out;
    out.A = a.value;
    out.C = c.value - E * gamma_over;
    out.F = f.value - B_ * gamma_over;
    out.D = d.value;
    out.depth = N_;
    out.tail_A = a.tail;
    out.tail_C = c.tail;
    out.tail_F = f.tail;
    out.tail_D = d.tail;
    return out;
}

BigRational ConstraintSystem::determinant(const BigRational& E) const
{
    const ConstraintValues v = constraints(E);
    return v.A * v.D - v.F * v.C;
}

RawConstraints ConstraintSystem::raw(const CoefficientTable& table, const BigRational& E) const
{
    const BigRational one_less = p_.as_rational() - 1;
    const BigRational k = inverse_gamma_m2_;

    auto term = [&](const BigRational& coef, long e, const char* where) {
        const auto w = inverse_gap(p_, e);
        if (!w) throw StructuralError(std::string("nonzero coefficient meets a zero denominator in the ") + where + " condition");
        return coef * *w;
    };

    BigRational inside_c, inside_k, outside_c, outside_k;
    for (long n = 0; n < static_cast<long>(table.c.size()); ++n) {
        if (table.c[n].is_zero()) continue;
        inside_c += term(table.c[n], 3 - n, "inside");
        outside_c += term(table.c[n], -n, "outside");
    }
    for (long n = 1; n < static_cast<long>(table.k.size()); ++n) {
        if (table.k[n].is_zero()) continue;
        inside_k += term(table.k[n], n + 3, "inside");
        outside_k += term(table.k[n], n, "outside");
    }

    const BigRational c0 = table.c.empty() ? BigRational(0) : table.c[0];
    const BigRational k5 = table.k.size() > 5 ? table.k[5] : BigRational(0);

    RawConstraints out;
    out.inside = k * one_less * (inside_c - inside_k) - E * c0;
    out.outside = k * one_less * (outside_c - outside_k) + B_ * k5;
    return out;
}

std::vector<BigRational> coeffs_inside(const ModelParams& params, const BigRational& c0)
{
    params.validate();
    std::vector<BigRational> c(2 * params.N + 1);
    c[0] = c0;
    for (long n = 0; n + 2 <= params.N; ++n)
        c[2 * n + 4] = (params.E * c[2 * n + 2] - params.B * c[2 * n]) * gamma_p(params.p, 2 * n + 3) /
                       gamma_p(params.p, 2 * n + 5);
    return c;
}

std::vector<BigRational> coeffs_outside(const ModelParams& params, const BigRational& k5)
{
    params.validate();
    std::vector<BigRational> k(2 * params.N + 6);
    k[5] = k5;
    for (long n = 1; n <= params.N; ++n)
        k[2 * n + 5] = (params.E * k[2 * n + 3] -
                        k[2 * n + 1] * gamma_p(params.p, -2 * n) / gamma_p(params.p, -2 * n - 2)) /
                       params.B;
    return k;
}

CoefficientTable coefficient_table(const ModelParams& params, const BigRational& c0, const BigRational& k5)
{
    CoefficientTable t;
    t.tau = coeffs_inside(params, 1);
    t.s = coeffs_outside(params, 1);
    t.c.reserve(t.tau.size());
    t.k.reserve(t.s.size());
    for (const auto& v : t.tau) t.c.push_back(c0 * v);
    for (const auto& v : t.s) t.k.push_back(k5 * v);
    return t;
}

ConstraintValues constraint_values(const ModelParams& params)
{
    return ConstraintSystem(params.p, params.B, params.N).constraints(params.E);
}

RawConstraints raw_constraints(const ModelParams& params, const CoefficientTable& table)
{
    return ConstraintSystem(params.p, params.B, params.N).raw(table, params.E);
}

BigRational determinant(const ModelParams& params)
{
    return ConstraintSystem(params.p, params.B, params.N).determinant(params.E);
}

BigRational asymptotic_E(const Prime& p, const BigRational& B)
{
    require_unit_coupling(B);
    if (is_unit(B, 1)) return BigRational(2) - BigRational(2) / p.as_rational();
    return BigRational(-2) / (3 * pow_p(p, 2)) + BigRational(7) / (3 * pow_p(p, 3));
}

BigRational scaled_error(const Prime& p, const BigRational& B, const BigRational& E)
{
    const BigRational gap = (E - asymptotic_E(p, B)).abs();
    return gap * pow_p(p, is_unit(B, 1) ? 2 : 4);
}

std::pair<BigRational, BigRational> default_bracket(const Prime& p, const BigRational& B)
{
    const BigRational centre = asymptotic_E(p, B);
    const BigRational half = std::max(pow_p(p, -1), 10 * centre.abs());
    return {centre - half, centre + half};
}

EigenResult solve_E(const ConstraintSystem& system, std::pair<BigRational, BigRational> bracket, const BigRational& tol)
{
    if (tol.sign() <= 0) throw ArgumentError("bisection tolerance must be positive");
    auto [lo, hi] = std::move(bracket);
    if (lo >= hi) throw BracketError("degenerate bracket: lo = " + lo.to_string() + " is not below hi = " + hi.to_string(), "", "");

    BigRational g_lo = system.determinant(lo);
    const BigRational g_hi = system.determinant(hi);

    EigenResult out;
    out.N = system.depth();

    if (g_lo.is_zero()) {
        hi = lo;
    } else if (g_hi.is_zero()) {
        lo = hi;
    } else if (g_lo.sign() == g_hi.sign()) {
        throw BracketError("G(E) = AD - FC has the same sign at both ends of [" + lo.to_decimal() + ", " + hi.to_decimal() + "]",
                           g_lo.to_decimal(), g_hi.to_decimal());
    }

    while (hi - lo >= tol) {
        BigRational mid = (lo + hi) / 2;
        const BigRational g_mid = system.determinant(mid);
        ++out.iterations;
        if (g_mid.is_zero()) {
            lo = mid;
            hi = std::move(mid);
            break;
        }
        if (g_mid.sign() == g_lo.sign()) {
            lo = std::move(mid);
            g_lo = g_mid;
        } else {
            hi = std::move(mid);
        }
    }

    out.E = (lo + hi) / 2;
    out.lo = std::move(lo);
    out.hi = std::move(hi);
    out.determinant = system.determinant(out.E);
    const BigRational& B = system.B();
    if (is_unit(B, 1) || is_unit(B, -1)) {
        out.asymptotic = asymptotic_E(system.prime(), B);
        out.scaled_error = scaled_error(system.prime(), B, out.E);
    }
    return out;
}

EigenResult solve_E(const Prime& p, const BigRational& B, std::optional<std::pair<BigRational, BigRational>> bracket,
                    const BigRational& tol, long N)
{
    const ConstraintSystem system(p, B, N);
    return solve_E(system, bracket ? std::move(*bracket) : default_bracket(p, B), tol);
}

std::vector<EigenResult> scan_roots(const Prime& p, const BigRational& B, const BigRational& lo, const BigRational& hi,
                                    long steps, const BigRational& tol, long N)
{
    if (steps < 1) throw ArgumentError("scan needs at least one grid cell");
    if (lo >= hi) throw BracketError("degenerate scan interval", "", "");

    const ConstraintSystem system(p, B, N);
    std::vector<BigRational> grid;
    for (long i = 0; i <= steps; ++i) grid.push_back(lo + (hi - lo) * BigRational(i) / BigRational(steps));
    const std::vector<BigRational> g = parallel::determinant_grid(system, grid);

    std::vector<EigenResult> roots;
    for (long i = 0; i < steps; ++i) {
        if (g[i].is_zero() && i > 0) continue; // already reported as the right end of the previous cell
        if (g[i].is_zero() || g[i + 1].is_zero() || g[i].sign() != g[i + 1].sign())
            roots.push_back(solve_E(system, {grid[i], grid[i + 1]}, tol));
    }
    return roots;
}

TauSPrediction tau_s_asymptotics(const Prime& p, const BigRational& B, const BigRational& E, long n)
{
    require_unit_coupling(B);
    if (n < 1) throw ArgumentError("asymptotic index n must be at least 1, got " + std::to_string(n));

    TauSPrediction out;
    const BigRational nE = BigRational(n) * E;
    if (is_unit(B, 1)) {
        const int sign_n = n % 2 == 0 ? 1 : -1;
        out.tau_4n = BigRational(sign_n) * pow_p(p, -2 * n);
        out.tau_4n_plus_2 = BigRational(sign_n) * nE * pow_p(p, -2 * n - 2);
        out.s_4n_plus_1 = BigRational(-sign_n) * pow_p(p, 2 * n - 2);
        out.s_4n_plus_3 = BigRational(-sign_n) * nE * pow_p(p, 2 * n - 2);
    } else {
        out.tau_4n = pow_p(p, -2 * n);
        out.tau_4n_plus_2 = nE * pow_p(p, -2 * n - 2);
        out.s_4n_plus_1 = pow_p(p, 2 * n - 2);
        out.s_4n_plus_3 = -nE * pow_p(p, 2 * n - 2);
    }
    return out;
}

CoefficientTable eigen_table(const ModelParams& params)
{
    const ConstraintValues v = constraint_values(params);
    return coefficient_table(params, v.F, v.A);
}

PsiValue evaluate_psi(const Prime& p, const CoefficientTable& table, long t)
{
    const bool inside = t <= 0;
    const auto& coef = inside ? table.c : table.k;

    PsiValue out;
    std::vector<BigRational> magnitudes;
    for (long n = 0; n < static_cast<long>(coef.size()); ++n) {
        if (coef[n].is_zero()) continue;
        const BigRational term = coef[n] * pow_p(p, inside ? t * n : -t * n);
        out.value += term;
        magnitudes.push_back(term.abs());
    }

    const std::size_t m = magnitudes.size();
    if (m >= 5 && std::is_sorted(magnitudes.end() - 5, magnitudes.end()))
        throw DivergenceError("Psi series terms grow at shell " + std::to_string(t));
    if (m >= 2) {
        const BigRational ratio = magnitudes[m - 1] / magnitudes[m - 2];
        if (ratio < BigRational(1)) out.tail_bound = magnitudes[m - 1] * ratio / (BigRational(1) - ratio);
        else out.tail_bound = magnitudes[m - 1];
    }
    return out;
}

BigRational residual(const ModelParams& params, const CoefficientTable& table, long t)
{
    params.validate();
    const Prime& p = params.p;
    BigRational d2;
    for (long n = 0; n < static_cast<long>(table.c.size()); ++n)
        if (!table.c[n].is_zero()) d2 += table.c[n] * d_alpha_f(p, kOrder, n).evaluate(t);
    for (long n = 1; n < static_cast<long>(table.k.size()); ++n)
        if (!table.k[n].is_zero()) d2 += table.k[n] * d_alpha_g(p, kOrder, -n).evaluate(t);

    const BigRational psi = evaluate_psi(p, table, t).value;
    return (d2 + params.B * pow_p(p, 2 * t) * psi - params.E * psi).abs();
}

BigRational relative_residual(const ModelParams& params, const CoefficientTable& table, long t)
{
    const BigRational scale = (params.E * evaluate_psi(params.p, table, t).value).abs();
    if (scale.is_zero()) throw DomainError("relative residual undefined where E Psi vanishes");
    return residual(params, table, t) / scale;
}

CoefficientTable scale_solution(const CoefficientTable& table, const BigRational& c)
{
    CoefficientTable out = table;
    for (auto& v : out.c) v *= c;
    for (auto& v : out.k) v *= c;
    return out;
}

bool NaiveSeries::converges_at_shell(long t) const
{
    return pow_p(p, 4 * t) < region_bound;
}

std::vector<BigRational> NaiveSeries::partial_sums(long t) const
{
    std::vector<BigRational> sums;
    BigRational running;
    for (std::size_t j = 0; j < b.size(); j += 4) {
        running += b[j] * pow_p(p, static_cast<long>(j) * t);
        sums.push_back(running);
    }
    return sums;
}

NaiveSeries naive_series(const Prime& p, const BigRational& B, long N)
{
    if (B.is_zero()) throw UnsupportedError("B = 0 leaves only the constant solution");
    if (N < 0) throw ArgumentError("naive series depth must be non-negative");

    NaiveSeries out{p, B, std::vector<BigRational>(4 * N + 1), pow_p(p, 2) / B.abs(), false};
    out.b[0] = 1;
    for (long j = 0; j + 4 <= 4 * N; j += 4)
        out.b[j + 4] = -B * out.b[j] * gamma_p(p, j + 3) / gamma_p(p, j + 5);
    return out;
}

} // namespace padic
