#include <benchmark/benchmark.h>

#include "halflow/flow.hpp"
#include "halflow/offdiag.hpp"
#include "halflow/sampling.hpp"
#include "halflow/spectral.hpp"

using namespace halflow;

static void bm_transform_roundtrip(benchmark::State& state) {
    CircleGrid g(int(state.range(0)));
    Rng rng(1);
    GridField f = random_band_limited(g, 2, g.max_mode(), rng);
    for (auto _ : state) {
        GridField back = synthesize(analyze(f), g);
        benchmark::DoNotOptimize(back.data());
    }
}
BENCHMARK(bm_transform_roundtrip)->Arg(256)->Arg(1024)->Arg(4096);

static void bm_lambda_raw(benchmark::State& state) {
    CircleGrid g(int(state.range(0)));
    Rng rng(2);
    SphereField u = perturbed_constant(g, 2, 8, 0.3, rng);
    for (auto _ : state) {
        GridField lam = lambda_raw(u);
        benchmark::DoNotOptimize(lam.data());
    }
}
BENCHMARK(bm_lambda_raw)->Arg(256)->Arg(512)->Arg(1024);

static void bm_flow_step(benchmark::State& state) {
    CircleGrid g(int(state.range(0)));
    Rng rng(3);
    GridField u = perturbed_constant(g, 2, 8, 0.3, rng).field();
    for (auto _ : state) {
        StepResult r = step(u, 0.01, Scheme::exponential, true);
        benchmark::DoNotOptimize(r.u.data());
    }
}
BENCHMARK(bm_flow_step)->Arg(256)->Arg(512)->Arg(1024);

static void bm_divergence(benchmark::State& state) {
    CircleGrid g(int(state.range(0)));
    Rng rng(4);
    SphereField u = perturbed_constant(g, 2, 8, 0.3, rng);
    OffDiagonalKernel omega = omega_potential(u);
    for (auto _ : state) {
        GridField d = frac_divergence(omega, 0.5);
        benchmark::DoNotOptimize(d.data());
    }
}
BENCHMARK(bm_divergence)->Arg(256)->Arg(512);

BENCHMARK_MAIN();
