#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "fosc/classical.hpp"
#include "fosc/evolution.hpp"
#include "fosc/expr.hpp"
#include "fosc/fock.hpp"
#include "fosc/nogo.hpp"

namespace {

void BM_ParseDifferentiate(benchmark::State& state) {
    for (auto _ : state) {
        auto ast = fosc::parse_expression("2*(1-exp(-x/2))");
        benchmark::DoNotOptimize(fosc::differentiate(ast));
    }
}
BENCHMARK(BM_ParseDifferentiate);

void BM_ParsedEval(benchmark::State& state) {
    const auto f = fosc::resolve_f_spec("2*(1-exp(-x/2))");
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.value(x));
        x += 1e-6;
    }
}
BENCHMARK(BM_ParsedEval);

void BM_Rk4Trajectory(benchmark::State& state) {
    const auto er = fosc::einstein_rosen_hamiltonian();
    for (auto _ : state)
        benchmark::DoNotOptimize(fosc::integrate_eom(er, {std::sqrt(2.0)}, 1.0, 1e-3));
}
BENCHMARK(BM_Rk4Trajectory);

void BM_CoherentState(benchmark::State& state) {
    const double mag = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fosc::coherent_state({mag}));
}
BENCHMARK(BM_CoherentState)->Arg(1)->Arg(2)->Arg(4);

void BM_Evolve(benchmark::State& state) {
    const auto s = fosc::coherent_state({2.0});
    const fosc::evolution_plan plan(fosc::einstein_rosen_hamiltonian(), s.nmax());
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fosc::evolve(s, plan, t));
        t += 0.05;
    }
}
BENCHMARK(BM_Evolve);

void BM_Expectations(benchmark::State& state) {
    const auto s = fosc::coherent_state({2.0});
    for (auto _ : state)
        benchmark::DoNotOptimize(fosc::expectations(s));
}
BENCHMARK(BM_Expectations);

void BM_DephasePoint(benchmark::State& state) {
    const auto er = fosc::einstein_rosen_hamiltonian();
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fosc::coherence_defect({std::sqrt(2.0)}, er, t));
        t += 0.05;
    }
}
BENCHMARK(BM_DephasePoint);

void BM_PositionWavefunction(benchmark::State& state) {
    const auto s = fosc::coherent_state({1.5});
    std::vector<double> xs(401);
    for (int i = 0; i < 401; ++i)
        xs[i] = -8.0 + 16.0 * i / 400.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(fosc::position_wavefunction(s, xs));
}
BENCHMARK(BM_PositionWavefunction);

void BM_IdentityResolution(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(fosc::identity_resolution_check(12, 1.0, 400, 256));
}
BENCHMARK(BM_IdentityResolution);

void BM_ResidualScan(benchmark::State& state) {
    const std::vector<double> radii = {0.0, 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(fosc::er_impossibility_scan(12, 8, radii));
}
BENCHMARK(BM_ResidualScan);

} // namespace

BENCHMARK_MAIN();
