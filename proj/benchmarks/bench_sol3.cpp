#include <benchmark/benchmark.h>

#include "sol3/families.hpp"
#include "sol3/solutions.hpp"
#include "sol3/surface.hpp"
#include "sol3/verify.hpp"

namespace {

using namespace sol3;

void BM_GroupMul(benchmark::State& state) {
    const Point p{0.4, -1.2, 0.8}, q{1.1, 0.3, -0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(group_mul(p, q));
    }
}
BENCHMARK(BM_GroupMul);

void BM_MeanCurvature_TypeI(benchmark::State& state) {
    const Immersion imm =
        build_surface(TranslationType::I, curves::poly({0.2, -1.1, 0.4}),
                      curves::poly({0.3, 0.5, -0.1}))
            .immersion;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mean_curvature(imm, 0.4, -0.3).H);
    }
}
BENCHMARK(BM_MeanCurvature_TypeI);

void BM_FdMeanCurvature_TypeI(benchmark::State& state) {
    const Immersion imm =
        build_surface(TranslationType::I, curves::poly({0.2, -1.1, 0.4}),
                      curves::poly({0.3, 0.5, -0.1}))
            .immersion;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fd_mean_curvature(imm, 0.4, -0.3));
    }
}
BENCHMARK(BM_FdMeanCurvature_TypeI);

void BM_ResidualType3(benchmark::State& state) {
    const CurveFn f = curves::poly({0.2, -1.1, 0.4});
    const CurveFn g = curves::log_abs(0.5, -0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(residual_type3(f, g, 0.7, 1.3));
    }
}
BENCHMARK(BM_ResidualType3);

void BM_ScherkI(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(scherk_I(t));
    }
}
BENCHMARK(BM_ScherkI)->Arg(1)->Arg(5)->Arg(20);

void BM_ScherkIInv(benchmark::State& state) {
    const double u = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(scherk_I_inv(u));
    }
}
BENCHMARK(BM_ScherkIInv)->Arg(1)->Arg(8);

void BM_ScherkSurfaceH(benchmark::State& state) {
    const Immersion imm = materialize(SolutionSpec{TypeIScherk{2.0, 0.0, 1.0}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(mean_curvature(imm, 0.3, 0.7).H);
    }
}
BENCHMARK(BM_ScherkSurfaceH);

void BM_VerifyGrid_Plane(benchmark::State& state) {
    const Immersion imm = materialize(SolutionSpec{PlaneZ{0.0}});
    GridSpec grid = default_grid(imm);
    grid.ns = grid.nt = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_surface(imm, grid, 1e-8).max_abs_H);
    }
}
BENCHMARK(BM_VerifyGrid_Plane)->Arg(20)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
