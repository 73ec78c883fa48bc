#include <doctest.h>

#include "generators.hpp"
#include "padic/errors.hpp"
#include "padic/schrodinger.hpp"
#include "padic/vladimirov.hpp"

using namespace padic;

namespace {

BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }

ModelParams params(long p, long B, BigRational E, long N) { return ModelParams{Prime(p), q(B), std::move(E), N}; }

} // namespace

TEST_CASE("inside recurrence")
{
    const Prime p(5);
    const std::vector<BigRational> c = coeffs_inside(params(5, 1, q(0), 6), q(3));
    CHECK(c.size() == 13);
    CHECK(c[0] == q(3));
    CHECK(c[2] == q(0));
    CHECK(c[4] == -q(3) * gamma_p(p, 3) / gamma_p(p, 5));
    // two steps with E = 0: (-B)^2 Gamma(3) Gamma(7) / (Gamma(5) Gamma(9))
    const std::vector<BigRational> unit = coeffs_inside(params(5, 1, q(0), 6), q(1));
    CHECK(unit[8] == gamma_p(p, 3) * gamma_p(p, 7) / (gamma_p(p, 5) * gamma_p(p, 9)));
    for (const auto& v : coeffs_inside(params(5, 1, q(2), 6), q(0))) CHECK(v.is_zero());
}

TEST_CASE("outside recurrence")
{
    const Prime p(7);
    const BigRational E = q(3, 2), B = q(-2);
    const ModelParams m{p, B, E, 5};
    const std::vector<BigRational> k = coeffs_outside(m, q(5));
    CHECK(k.size() == 16);
    CHECK(k[1] == q(0));
    CHECK(k[3] == q(0));
    CHECK(k[5] == q(5));
    CHECK(k[7] == E * k[5] / B);
    CHECK(k[9] == (E * k[7] - k[5] * gamma_p(p, -4) / gamma_p(p, -6)) / B);
    for (const auto& v : coeffs_outside(m, q(0))) CHECK(v.is_zero());
    CHECK_THROWS_AS(coeffs_outside(params(7, 0, q(1), 5), q(1)), UnsupportedError);
}

TEST_CASE("structural zeros and normalisation")
{
    testing::Gen gen(23);
    for (int i = 0; i < 30; ++i) {
        const long p = std::vector<long>{3, 5, 7, 11}[gen.integer(0, 3)];
        const ModelParams m{Prime(p), gen.nonzero_rational(20), gen.rational(20), gen.integer(1, 12)};
        const BigRational c0 = gen.nonzero_rational(20), k5 = gen.nonzero_rational(20);
        const CoefficientTable t = coefficient_table(m, c0, k5);
        for (std::size_t n = 1; n < t.c.size(); n += 2) CHECK(t.c[n].is_zero());
        for (std::size_t n = 0; n < t.k.size(); n += 2) CHECK(t.k[n].is_zero());
        CHECK(t.c[2].is_zero());
        CHECK(t.k[1].is_zero());
        CHECK(t.k[3].is_zero());
        CHECK(t.tau[0] == q(1));
        CHECK(t.s[5] == q(1));
        CHECK(t.tau == coefficient_table(m, q(1), q(1)).c);
        for (std::size_t n = 0; n < t.c.size(); ++n) CHECK(t.c[n] == c0 * t.tau[n]);
        for (std::size_t n = 0; n < t.k.size(); ++n) CHECK(t.k[n] == k5 * t.s[n]);
    }
}

TEST_CASE("constraint values")
{
    const ModelParams smoke = params(5, 1, q(0), 30);
    const ConstraintValues v = constraint_values(smoke);
    CHECK(v.depth == 30);
    CHECK(v.tail_A < pow(q(10), -20));

    const Prime p(101);
    const ConstraintValues w = constraint_values(ModelParams{p, q(1), asymptotic_E(p, q(1)), 30});
    // leading terms: A ~ 1/(p-1), D ~ -1/p^8
    CHECK((w.A - q(1, 100)).abs() < pow_p(p, -3));
    CHECK((w.D * pow_p(p, 8) + 1).abs() < q(1, 10));
}

TEST_CASE("the two constraint paths agree exactly")
{
    testing::Gen gen(29);
    for (int i = 0; i < 20; ++i) {
        const Prime p(std::vector<long>{3, 5, 7, 53}[gen.integer(0, 3)]);
        const ModelParams m{p, gen.nonzero_rational(10), gen.rational(10), gen.integer(2, 15)};
        const BigRational c0 = gen.rational(30), k5 = gen.rational(30);
        const CoefficientTable t = coefficient_table(m, c0, k5);
        const ConstraintValues v = constraint_values(m);
        const RawConstraints raw = raw_constraints(m, t);
        const BigRational scale = gamma_p(p, -2).reciprocal() * (p.as_rational() - 1);
        CHECK(raw.inside == scale * (c0 * v.C - k5 * v.D));
        CHECK(raw.outside == scale * (c0 * v.A - k5 * v.F));
    }
}

TEST_CASE("null vector satisfies both raw conditions at a root")
{
    const Prime p(53);
    const EigenResult r = solve_E(p, q(1), std::nullopt, pow(q(10), -40), 25);
    const ModelParams m{p, q(1), r.E, 25};
    const CoefficientTable t = eigen_table(m);
    const RawConstraints raw = raw_constraints(m, t);
    CHECK(raw.outside == q(0));
    CHECK(raw.inside.abs() < pow(q(10), -35));
}

TEST_CASE("determinant changes sign across the B = 1 root")
{
    const ConstraintSystem system(Prime(101), q(1), 30);
    CHECK(system.determinant(q(1)).sign() != system.determinant(q(2)).sign());
    CHECK(system.determinant(q(1)) == determinant(params(101, 1, q(1), 30)));

    const BigRational a = asymptotic_E(Prime(101), q(1));
    const BigRational half = q(1, 2);
    CHECK(system.determinant(a).abs() < system.determinant(a + half).abs());
    CHECK(system.determinant(a).abs() < system.determinant(a - half).abs());
}

TEST_CASE("asymptotic eigenvalues")
{
    CHECK(asymptotic_E(Prime(101), q(1)) == q(200, 101));
    CHECK(asymptotic_E(Prime(101), q(-1)) == q(-2, 30603) + q(7, 3090903));
    CHECK_THROWS_AS(asymptotic_E(Prime(101), q(2)), UnsupportedError);
    const auto [lo, hi] = default_bracket(Prime(101), q(1));
    CHECK(hi - lo == q(2) * q(10) * q(200, 101));
}

TEST_CASE("bisection")
{
    const Prime p(53);
    const BigRational tol = pow(q(10), -12);
    const EigenResult r = solve_E(p, q(1), std::nullopt, tol, 20);
    CHECK(r.hi - r.lo < tol);
    CHECK(r.lo <= r.E);
    CHECK(r.E <= r.hi);
    CHECK(r.N == 20);
    REQUIRE(r.scaled_error);
    CHECK(*r.scaled_error < q(1, 1000));

    const ConstraintSystem system(p, q(1), 20);
    CHECK(system.determinant(r.lo).sign() != system.determinant(r.hi).sign());

    CHECK_THROWS_AS(solve_E(p, q(1), std::make_pair(q(1), q(1)), tol, 20), BracketError);
    try {
        solve_E(p, q(1), std::make_pair(q(3), q(4)), tol, 20);
        FAIL("expected a bracket error");
    } catch (const BracketError& e) {
        CHECK_FALSE(e.g_lo().empty());
        CHECK_FALSE(e.g_hi().empty());
    }
    CHECK_THROWS_AS(solve_E(p, q(0), std::nullopt, tol, 20), UnsupportedError);
    CHECK_THROWS_AS(solve_E(p, q(2), std::nullopt, tol, 20), UnsupportedError);
    const EigenResult other = solve_E(p, q(2), std::make_pair(q(0), q(4)), tol, 20);
    CHECK_FALSE(other.asymptotic);
}

TEST_CASE("root scan")
{
    const std::vector<EigenResult> roots = scan_roots(Prime(53), q(1), q(-4), q(4), 16, pow(q(10), -8), 20);
    REQUIRE_FALSE(roots.empty());
    bool near_prediction = false;
    for (const auto& r : roots) near_prediction |= (r.E - q(104, 53)).abs() < q(1, 100);
    CHECK(near_prediction);
}

TEST_CASE("leading-order tau and s")
{
    const Prime p(101);
    const BigRational E = q(7, 4);
    const TauSPrediction one = tau_s_asymptotics(p, q(1), E, 1);
    CHECK(one.tau_4n == -pow_p(p, -2));
    CHECK(one.tau_4n_plus_2 == -E * pow_p(p, -4));
    CHECK(one.s_4n_plus_1 == q(1));
    CHECK(one.s_4n_plus_3 == E);

    const ModelParams m{p, q(1), E, 12};
    const CoefficientTable t = coefficient_table(m, q(1), q(1));
    CHECK(t.tau[4] == -gamma_p(p, 3) / gamma_p(p, 5));
    CHECK(t.s[7] == E);
    const BigRational bound = q(4) / pow_p(p, 1);
    for (long n = 1; n <= 5; ++n) {
        const TauSPrediction pr = tau_s_asymptotics(p, q(1), E, n);
        CHECK((t.tau[4 * n] / pr.tau_4n - 1).abs() < bound);
        CHECK((t.tau[4 * n + 2] / pr.tau_4n_plus_2 - 1).abs() < bound);
        CHECK((t.s[4 * n + 1] / pr.s_4n_plus_1 - 1).abs() < bound);
        CHECK((t.s[4 * n + 3] / pr.s_4n_plus_3 - 1).abs() < bound);
    }

    const ModelParams neg{p, q(-1), E, 12};
    const CoefficientTable u = coefficient_table(neg, q(1), q(1));
    for (long n = 1; n <= 5; ++n) {
        const TauSPrediction pr = tau_s_asymptotics(p, q(-1), E, n);
        CHECK((u.tau[4 * n] / pr.tau_4n - 1).abs() < bound);
        CHECK((u.tau[4 * n + 2] / pr.tau_4n_plus_2 - 1).abs() < bound);
        CHECK((u.s[4 * n + 1] / pr.s_4n_plus_1 - 1).abs() < bound);
        CHECK((u.s[4 * n + 3] / pr.s_4n_plus_3 - 1).abs() < bound);
    }
    CHECK_THROWS_AS(tau_s_asymptotics(p, q(3), E, 1), UnsupportedError);
    CHECK_THROWS_AS(tau_s_asymptotics(p, q(1), E, 0), ArgumentError);
}

TEST_CASE("evaluating Psi")
{
    const Prime p(101);
    const ModelParams m{p, q(1), q(2), 10};
    const CoefficientTable t = coefficient_table(m, q(3), q(-2));
    BigRational sum;
    for (const auto& c : t.c) sum += c;
    CHECK(evaluate_psi(p, t, 0).value == sum);

    BigRational outside;
    for (std::size_t n = 0; n < t.k.size(); ++n) outside += t.k[n] * pow_p(p, -static_cast<long>(n));
    const PsiValue at_one = evaluate_psi(p, t, 1);
    CHECK(at_one.value == outside);
    CHECK(at_one.tail_bound < pow(q(10), -25));

    CHECK(evaluate_psi(p, scale_solution(t, q(0)), 2).value == q(0));

    CoefficientTable growing;
    growing.c = {q(1), q(0), q(10), q(0), q(100), q(0), q(1000), q(0), q(10000), q(0), q(100000)};
    CHECK_THROWS_AS(evaluate_psi(p, growing, 0), DivergenceError);
}

TEST_CASE("residual")
{
    const Prime p(53);
    const EigenResult r = solve_E(p, q(1), std::nullopt, pow(q(10), -40), 25);
    const ModelParams m{p, q(1), r.E, 25};
    const CoefficientTable t = eigen_table(m);
    for (long s = -2; s <= 2; ++s) CHECK(relative_residual(m, t, s) < pow(q(10), -10));

    const CoefficientTable zero = scale_solution(t, q(0));
    CHECK(residual(m, zero, 1) == q(0));

    const ModelParams off{p, q(1), r.E + q(1, 10), 25};
    const CoefficientTable t_off = eigen_table(off);
    CHECK(relative_residual(off, t_off, 0) > pow(q(10), 5) * relative_residual(m, t, 0));
}

TEST_CASE("scaling a solution scales its residual")
{
    const Prime p(7);
    const ModelParams m{p, q(1), q(12, 7), 8};
    const CoefficientTable t = eigen_table(m);
    for (const BigRational& c : {q(0), q(1), q(3, 7), q(-2)})
        for (long s = -2; s <= 2; ++s) CHECK(residual(m, scale_solution(t, c), s) == c.abs() * residual(m, t, s));
    CHECK(scale_solution(t, q(1)).c == t.c);
}

TEST_CASE("naive series")
{
    const Prime p(5);
    const NaiveSeries s = naive_series(p, q(1), 8);
    CHECK(s.b[4] == -gamma_p(p, 3) / gamma_p(p, 5));
    CHECK(s.b[6] == q(0));
    CHECK(s.b[2] == q(0));
    const BigRational ratio = s.b[4] / q(-1, 25);
    CHECK(ratio < q(105, 100));
    CHECK(ratio > q(100, 105));
    CHECK(s.region_bound == q(25));
    CHECK_FALSE(s.convergent_everywhere);
    CHECK(s.converges_at_shell(0));
    CHECK_FALSE(s.converges_at_shell(1));

    BigRational product(1);
    for (long j = 1; j <= 3; ++j) product *= gamma_p(p, 4 * j - 1) / gamma_p(p, 4 * j + 1);
    CHECK(s.b[12] == -product);

    CHECK(naive_series(Prime(7), q(-3), 2).region_bound == q(49, 3));
    CHECK_THROWS_AS(naive_series(p, q(0), 3), UnsupportedError);
}
