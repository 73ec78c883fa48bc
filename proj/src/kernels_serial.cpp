#include <algorithm>

#include "padic/kernels.hpp"

namespace padic::serial {

std::vector<BigRational> determinant_grid(const ConstraintSystem& system, const std::vector<BigRational>& grid)
{
    std::vector<BigRational> out;
    out.reserve(grid.size());
    for (const auto& E : grid) out.push_back(system.determinant(E));
    return out;
}

std::vector<BigRational> residual_profile(const ModelParams& params, const CoefficientTable& table,
                                          const std::vector<long>& shells)
{
    std::vector<BigRational> out;
    out.reserve(shells.size());
    for (long t : shells) out.push_back(residual(params, table, t));
    return out;
}

std::vector<SweepRow> sweep(const std::vector<long>& primes, const std::vector<BigRational>& couplings, long N,
                            const BigRational& tol)
{
    std::vector<SweepRow> rows;
    for (long p : primes)
        for (const auto& B : couplings) {
            const Prime prime(p);
            rows.push_back({p, B, solve_E(prime, B, std::nullopt, tol, N)});
        }
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return a.p != b.p ? a.p < b.p : a.B < b.B;
    });
    return rows;
}

} // namespace padic::serial
