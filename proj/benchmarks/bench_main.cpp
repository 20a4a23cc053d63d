// Microbenchmarks for the closed-form solver, the grid pipeline, and the
// iterative baseline it is compared against. Run the binary directly; these
// are not part of the test suite.

#include <benchmark/benchmark.h>

#include "a1gm/baselines.hpp"
#include "a1gm/dataset.hpp"
#include "a1gm/grid.hpp"
#include "a1gm/matrix.hpp"
#include "a1gm/nmmf.hpp"
#include "a1gm/rng.hpp"

namespace {

a1gm::DenseMatrix random_positive(std::size_t r, std::size_t c, std::uint64_t seed) {
    a1gm::SplitMix64 rng(seed);
    a1gm::DenseMatrix M(r, c);
    for (double& v : M.data)
        v = rng.next_unit_open() + 1e-6;
    return M;
}

a1gm::MatrixTriple random_triple(std::size_t I, std::size_t J, std::size_t N, std::size_t M) {
    a1gm::MatrixTriple T;
    T.X = random_positive(I, J, 1);
    T.Y = random_positive(N, J, 2);
    T.Z = random_positive(I, M, 3);
    return T;
}

void BM_KlDiv(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const a1gm::DenseMatrix X = random_positive(n, n, 4);
    const a1gm::DenseMatrix Y = random_positive(n, n, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(a1gm::kl_div(X, Y));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n * n));
}
BENCHMARK(BM_KlDiv)->Arg(100)->Arg(500);

void BM_BestRank1Nmmf(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const a1gm::MatrixTriple T = random_triple(n, n, n / 4, n / 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(a1gm::best_rank1_nmmf(T, 1.0, 1.0));
}
BENCHMARK(BM_BestRank1Nmmf)->Arg(100)->Arg(500)->Arg(1000);

void BM_ExpandToGrid(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const a1gm::Dataset ds = a1gm::gen_grid_missing(n, 0.05, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(a1gm::expand_to_grid(ds.Phi));
}
BENCHMARK(BM_ExpandToGrid)->Arg(500)->Arg(2000);

void BM_A1gmGrid(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const a1gm::Dataset ds = a1gm::gen_grid_missing(n, 0.05, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(a1gm::a1gm(ds.Phi, ds.T));
}
BENCHMARK(BM_A1gmGrid)->Arg(100)->Arg(500)->Arg(1000)->Arg(2000);

void BM_A1gmCorner(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const a1gm::Dataset ds = a1gm::gen_corner_missing(n, 0.25, 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(a1gm::a1gm(ds.Phi, ds.T));
}
BENCHMARK(BM_A1gmCorner)->Arg(100)->Arg(500)->Arg(1000)->Arg(2000);

void BM_WnmfRank1(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const a1gm::Dataset ds = a1gm::gen_corner_missing(n, 0.25, 9);
    a1gm::IterativeConfig cfg;
    cfg.seed = 10;
    for (auto _ : state)
        benchmark::DoNotOptimize(a1gm::wnmf_rank1(ds.Phi, ds.T, cfg));
}
BENCHMARK(BM_WnmfRank1)->Arg(100)->Arg(500)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
