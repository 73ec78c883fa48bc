#include <algorithm>
#include <exception>
#include <optional>

#include <omp.h>

#include "padic/kernels.hpp"

namespace padic::parallel {

namespace {

// Runs body(i) for i in [0, n) across threads. The first failure by index is rethrown
// afterwards, so errors are as deterministic as the results.
template <typename Body>
void for_each_index(long n, Body body)
{
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            failures[i] = std::current_exception();
        }
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
}

} // namespace

int max_threads()
{
    return omp_get_max_threads();
}

std::vector<BigRational> determinant_grid(const ConstraintSystem& system, const std::vector<BigRational>& grid)
{
    std::vector<BigRational> out(grid.size());
    for_each_index(static_cast<long>(grid.size()), [&](long i) { out[i] = system.determinant(grid[i]); });
    return out;
}

std::vector<BigRational> residual_profile(const ModelParams& params, const CoefficientTable& table,
                                          const std::vector<long>& shells)
{
    std::vector<BigRational> out(shells.size());
    for_each_index(static_cast<long>(shells.size()), [&](long i) { out[i] = residual(params, table, shells[i]); });
    return out;
}

std::vector<SweepRow> sweep(const std::vector<long>& primes, const std::vector<BigRational>& couplings, long N,
                            const BigRational& tol)
{
    const long width = static_cast<long>(couplings.size());
    const long n = static_cast<long>(primes.size()) * width;
    std::vector<std::optional<SweepRow>> slots(static_cast<std::size_t>(n));
    for_each_index(n, [&](long i) {
        const long p = primes[i / width];
        const BigRational& B = couplings[i % width];
        slots[i] = SweepRow{p, B, solve_E(Prime(p), B, std::nullopt, tol, N)};
    });

    std::vector<SweepRow> rows;
    rows.reserve(slots.size());
    for (auto& s : slots) rows.push_back(std::move(*s));
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return a.p != b.p ? a.p < b.p : a.B < b.B;
    });
    return rows;
}

} // namespace padic::parallel
