#include "pfglm/kernels.hpp"
#include "pfglm/stats.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace pfglm;

namespace {

BallMatrix random_matrix(std::size_t n, Prec prec, unsigned seed) {
    const Ring& ring = Ring::of(mpz_class(2));
    const mpz_class bound = ring.pow(prec);
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    BallMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Ball::from_integer(ring, rng.get_z_range(bound), prec);
    return m;
}

void BM_matmul_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BallMatrix a = random_matrix(n, 150, 1), b = random_matrix(n, 150, 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_serial(a, b));
}

void BM_matmul_parallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BallMatrix a = random_matrix(n, 150, 1), b = random_matrix(n, 150, 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_parallel(a, b));
}

void BM_matvec_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BallMatrix a = random_matrix(n, 150, 1), b = random_matrix(n, 150, 2);
    const BallVector v = b.column(0);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::matvec_serial(a, v));
}

void BM_matvec_parallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BallMatrix a = random_matrix(n, 150, 1), b = random_matrix(n, 150, 2);
    const BallVector v = b.column(0);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::matvec_parallel(a, v));
}

ExperimentSpec stats_spec() {
    ExperimentSpec spec;
    spec.degrees = {2, 2, 2};
    spec.prime = 2;
    spec.prec = 100;
    spec.trials = 8;
    spec.seed = 3;
    return spec;
}

void BM_stats_serial(benchmark::State& state) {
    const ExperimentSpec spec = stats_spec();
    for (auto _ : state) benchmark::DoNotOptimize(loss_statistics_serial(spec, Pipeline::general));
}

void BM_stats_parallel(benchmark::State& state) {
    const ExperimentSpec spec = stats_spec();
    for (auto _ : state) benchmark::DoNotOptimize(loss_statistics(spec, Pipeline::general));
}

}  // namespace

BENCHMARK(BM_matmul_serial)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul_parallel)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_matvec_serial)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_matvec_parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_stats_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_stats_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
