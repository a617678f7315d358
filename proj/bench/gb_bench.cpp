// Compares the OpenMP S-polynomial reduction pass against the serial
// reference on the reduced relation sets.

#include <benchmark/benchmark.h>

#include "mkoszul/moduli.hpp"

using namespace mkoszul;

namespace {

void BM_gb_serial(benchmark::State& state) {
    ModuliRing ring(static_cast<int>(state.range(0)));
    auto basis = ring.reduced_polynomials();
    GroebnerOptions opt;
    opt.normal_degree_cap = 0;  // time the reduction pass, not the counting
    for (auto _ : state) {
        auto cert = buchberger_verify_serial(basis, ring.order(), opt);
        benchmark::DoNotOptimize(cert.verified);
    }
}

void BM_gb_parallel(benchmark::State& state) {
    ModuliRing ring(static_cast<int>(state.range(0)));
    auto basis = ring.reduced_polynomials();
    GroebnerOptions opt;
    opt.normal_degree_cap = 0;
    for (auto _ : state) {
        auto cert = buchberger_verify(basis, ring.order(), opt);
        benchmark::DoNotOptimize(cert.verified);
    }
}

}  // namespace

BENCHMARK(BM_gb_serial)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gb_parallel)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
