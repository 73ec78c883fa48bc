#pragma once

#include <vector>

#include "padic/big_rational.hpp"
#include "padic/core.hpp"
#include "padic/schrodinger.hpp"

namespace padic {

/// One grid point of a prime sweep.
struct SweepRow {
    long p;
    BigRational B;
    EigenResult result;
};

/// Batch kernels. `serial` is the reference implementation; `parallel` distributes the same
/// work over OpenMP threads and must return identical results in the same order.
namespace serial {

/// G(E) = AD - FC at every grid point.
std::vector<BigRational> determinant_grid(const ConstraintSystem& system, const std::vector<BigRational>& grid);

/// residual(params, table, t) for every shell in `shells`.
std::vector<BigRational> residual_profile(const ModelParams& params, const CoefficientTable& table,
                                          const std::vector<long>& shells);

/// solve_E with the default bracket for every (p, B); rows sorted by (p, B).
std::vector<SweepRow> sweep(const std::vector<long>& primes, const std::vector<BigRational>& couplings, long N,
                            const BigRational& tol);

} // namespace serial

namespace parallel {

std::vector<BigRational> determinant_grid(const ConstraintSystem& system, const std::vector<BigRational>& grid);

std::vector<BigRational> residual_profile(const ModelParams& params, const CoefficientTable& table,
                                          const std::vector<long>& shells);

std::vector<SweepRow> sweep(const std::vector<long>& primes, const std::vector<BigRational>& couplings, long N,
                            const BigRational& tol);

/// Threads OpenMP will use for the kernels above.
int max_threads();

} // namespace parallel

} // namespace padic
