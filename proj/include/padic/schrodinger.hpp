#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "padic/big_rational.hpp"
#include "padic/core.hpp"

namespace padic {

/// D^2 Psi + B |x|_p^2 Psi = E Psi, truncated at depth N.
struct ModelParams {
    Prime p;
    BigRational B;
    BigRational E;
    long N = 60;

    /// Throws UnsupportedError for B = 0 and ArgumentError for N < 1.
    void validate() const;
};

/// Ground-state coefficients. c holds c_0..c_{2N}, k holds k_0..k_{2N+5} (k_0 is unused and 0).
/// tau and s are the same sequences normalised by c_0 and k_5.
struct CoefficientTable {
    std::vector<BigRational> c;
    std::vector<BigRational> k;
    std::vector<BigRational> tau;
    std::vector<BigRational> s;

    long depth() const noexcept { return c.empty() ? 0 : static_cast<long>(c.size() - 1) / 2; }
};

/// c_0..c_{2N} from c_{2n+4} = (E c_{2n+2} - B c_{2n}) Gamma_p(2n+3)/Gamma_p(2n+5), c_2 = 0.
std::vector<BigRational> coeffs_inside(const ModelParams& params, const BigRational& c0);

/// k_0..k_{2N+5} from k_{2n+5} = (E k_{2n+3} - k_{2n+1} Gamma_p(-2n)/Gamma_p(-2n-2)) / B, k_1 = k_3 = 0.
std::vector<BigRational> coeffs_outside(const ModelParams& params, const BigRational& k5);

CoefficientTable coefficient_table(const ModelParams& params, const BigRational& c0, const BigRational& k5);

struct ConstraintValues {
    BigRational A, C, D, F;
    long depth = 0;
    BigRational tail_A, tail_C, tail_D, tail_F;
};

/// Residuals of the two raw coefficient-matching conditions: the |x|_p^0 coefficient on Z_p
/// and the |x|_p^-3 coefficient off Z_p. Both vanish for a genuine solution.
struct RawConstraints {
    BigRational inside;
    BigRational outside;
};

/// Gamma ratios and series weights for fixed (p, B, N), computed once; evaluating at a given E
/// only runs the recurrences and the weighted sums.
class ConstraintSystem {
public:
    ConstraintSystem(const Prime& p, BigRational B, long N);

    const Prime& prime() const noexcept { return p_; }
    const BigRational& B() const noexcept { return B_; }
    long depth() const noexcept { return N_; }

    std::vector<BigRational> tau(const BigRational& E) const;
    std::vector<BigRational> s(const BigRational& E) const;

    ConstraintValues constraints(const BigRational& E) const;
    ConstraintValues constraints(const std::vector<BigRational>& tau, const std::vector<BigRational>& s,
                                 const BigRational& E) const;

    /// G(E) = A D - F C.
    BigRational determinant(const BigRational& E) const;

    RawConstraints raw(const CoefficientTable& table, const BigRational& E) const;

private:
    Prime p_;
    BigRational B_;
    long N_;
    BigRational inverse_gamma_m2_;
    std::vector<BigRational> inside_ratio_;  // Gamma_p(2n+3)/Gamma_p(2n+5), n = 0..N-2
    std::vector<BigRational> outside_ratio_; // Gamma_p(-2n)/Gamma_p(-2n-2), n = 1..N (index n)
    std::vector<std::optional<BigRational>> weight_A_, weight_C_, weight_D_, weight_F_;
};

ConstraintValues constraint_values(const ModelParams& params);

/// Both raw conditions evaluated directly from the coefficient table.
RawConstraints raw_constraints(const ModelParams& params, const CoefficientTable& table);

BigRational determinant(const ModelParams& params);

/// 2 - 2/p for B = 1, -2/(3p^2) + 7/(3p^3) for B = -1. Other B: UnsupportedError.
BigRational asymptotic_E(const Prime& p, const BigRational& B);

/// |E - asymptotic_E| scaled by p^2 (B = 1) or p^4 (B = -1).
BigRational scaled_error(const Prime& p, const BigRational& B, const BigRational& E);

struct EigenResult {
    BigRational E;
    BigRational lo, hi;
    BigRational determinant;
    long N = 0;
    long iterations = 0;
    std::optional<BigRational> asymptotic;
    std::optional<BigRational> scaled_error;
};

/// Default root bracket: asymptotic_E +- max(1/p, 10 |asymptotic_E|).
std::pair<BigRational, BigRational> default_bracket(const Prime& p, const BigRational& B);

/// Bisection on the exact sign of G(E) until hi - lo < tol.
/// Throws BracketError when lo >= hi or G does not change sign.
EigenResult solve_E(const Prime& p, const BigRational& B, std::optional<std::pair<BigRational, BigRational>> bracket,
                    const BigRational& tol, long N);
EigenResult solve_E(const ConstraintSystem& system, std::pair<BigRational, BigRational> bracket, const BigRational& tol);

/// Every sign change of G on a uniform grid of `steps` cells over [lo, hi], each refined to tol.
std::vector<EigenResult> scan_roots(const Prime& p, const BigRational& B, const BigRational& lo, const BigRational& hi,
                                    long steps, const BigRational& tol, long N);

struct TauSPrediction {
    BigRational tau_4n;
    BigRational tau_4n_plus_2;
    BigRational s_4n_plus_1;
    BigRational s_4n_plus_3;
};

/// Leading-order forms of tau and s for B = +-1, n >= 1.
TauSPrediction tau_s_asymptotics(const Prime& p, const BigRational& B, const BigRational& E, long n);

/// Coefficient table of the eigenfunction at E with (c_0, k_5) = (F, A), the null vector of
/// the 2x2 system.
CoefficientTable eigen_table(const ModelParams& params);

struct PsiValue {
    BigRational value;
    BigRational tail_bound;
};

/// Psi at |x|_p = p^t: sum c_n p^(tn) on Z_p, sum k_n p^(-tn) off it.
/// Throws DivergenceError when the trailing terms grow.
PsiValue evaluate_psi(const Prime& p, const CoefficientTable& table, long t);

/// |D^2 Psi + B |x|_p^2 Psi - E Psi| at shell t with D^2 applied term by term.
BigRational residual(const ModelParams& params, const CoefficientTable& table, long t);

/// residual / |E Psi(t)|.
BigRational relative_residual(const ModelParams& params, const CoefficientTable& table, long t);

CoefficientTable scale_solution(const CoefficientTable& table, const BigRational& c);

/// Power series solution on all of Q_p with E = 0: b_{4n+4} = -B b_{4n} Gamma_p(4n+3)/Gamma_p(4n+5), b_0 = 1.
struct NaiveSeries {
    Prime p;
    BigRational B;
    std::vector<BigRational> b; // b_0..b_{4N}; b_{4n+2} and odd entries are 0
    /// The series converges exactly where |x|_p^4 < region_bound = p^2/|B|.
    BigRational region_bound;
    bool convergent_everywhere = false;

    bool converges_at_shell(long t) const;
    /// Partial sums S_0..S_N of sum b_{4n} p^(4nt).
    std::vector<BigRational> partial_sums(long t) const;
};

NaiveSeries naive_series(const Prime& p, const BigRational& B, long N);

} // namespace padic
