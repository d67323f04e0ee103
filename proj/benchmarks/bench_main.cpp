#include <benchmark/benchmark.h>

#include <complex>

#include "zml/gfunction.hpp"
#include "zml/runge.hpp"
#include "zml/selberg.hpp"
#include "zml/zeta.hpp"

namespace {

void BM_zeta_critical_line(benchmark::State& state) {
    double t = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zml::zeta(zml::cplx(0.5, t)));
    }
}
BENCHMARK(BM_zeta_critical_line)->Arg(100)->Arg(1000)->Arg(10000);

void BM_hardy_Z(benchmark::State& state) {
    double t = 1000.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(zml::hardy_Z(t));
        t += 0.01;
    }
}
BENCHMARK(BM_hardy_Z);

void BM_zeta_derivs(benchmark::State& state) {
    int K = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zml::zeta_derivs_upto(K, zml::cplx(0.5, 50.0)));
    }
}
BENCHMARK(BM_zeta_derivs)->Arg(4)->Arg(16);

void BM_dirichlet_grid(benchmark::State& state) {
    auto G = zml::build_G(8.0, 1e4, 16, 16);
    std::vector<double> ts(static_cast<size_t>(state.range(0)));
    for (size_t i = 0; i < ts.size(); ++i) ts[i] = 1e4 + 0.5 * double(i);
    for (auto _ : state) {
        benchmark::DoNotOptimize(G.eval_grid(0.5, ts));
    }
}
BENCHMARK(BM_dirichlet_grid)->Arg(100)->Arg(1000);

void BM_leja_points(benchmark::State& state) {
    auto reg = zml::build_region(zml::RegionParams{});
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zml::leja_points(reg, n));
    }
}
BENCHMARK(BM_leja_points)->Arg(20)->Arg(80);

void BM_selberg_poly(benchmark::State& state) {
    zml::selberg_table(50.0);  // warm the cache once
    for (auto _ : state) {
        benchmark::DoNotOptimize(zml::selberg_poly(50.0, zml::cplx(0.7, 1e4)));
    }
}
BENCHMARK(BM_selberg_poly);

}  // namespace

BENCHMARK_MAIN();
