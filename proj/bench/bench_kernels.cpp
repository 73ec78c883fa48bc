// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "padic/kernels.hpp"

using namespace padic;

namespace {

std::vector<BigRational> energy_grid(long points)
{
    std::vector<BigRational> grid;
    for (long i = 0; i < points; ++i) grid.emplace_back(BigInt(i), BigInt(points / 4 + 1));
    return grid;
}

template <auto Kernel>
void determinant_grid(benchmark::State& state)
{
    const ConstraintSystem system(Prime(101), BigRational(1), state.range(0));
    const std::vector<BigRational> grid = energy_grid(16);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(system, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}

template <auto Kernel>
void residual_profile(benchmark::State& state)
{
    const ModelParams params{Prime(101), BigRational(1), asymptotic_E(Prime(101), BigRational(1)), state.range(0)};
    const CoefficientTable table = eigen_table(params);
    const std::vector<long> shells{-3, -2, -1, 0, 1, 2, 3};
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(params, table, shells));
}

template <auto Kernel>
void sweep(benchmark::State& state)
{
    const std::vector<long> primes{5, 7, 11, 13};
    const std::vector<BigRational> couplings{BigRational(1), BigRational(-1)};
    const BigRational tol = BigRational::parse("1e-8");
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(primes, couplings, state.range(0), tol));
}

} // namespace

BENCHMARK(determinant_grid<serial::determinant_grid>)->Name("determinant_grid/serial")->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(determinant_grid<parallel::determinant_grid>)->Name("determinant_grid/omp")->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(residual_profile<serial::residual_profile>)->Name("residual_profile/serial")->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(residual_profile<parallel::residual_profile>)->Name("residual_profile/omp")->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(sweep<serial::sweep>)->Name("sweep/serial")->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(sweep<parallel::sweep>)->Name("sweep/omp")->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
