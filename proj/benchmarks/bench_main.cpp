#include "superhomology/catalog.hpp"
#include "superhomology/chain.hpp"
#include "superhomology/homology.hpp"
#include "superhomology/ranklin.hpp"

#include <benchmark/benchmark.h>

using namespace superhomology;

namespace {

void BM_ChainBasis(benchmark::State& state)
{
    const auto gs = catalog_generators("gl2");
    const int w = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t n = 0;
        for (int m = 0; m <= max_degree(gs, w); ++m)
            n += chain_basis(gs, m, w).size();
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_ChainBasis)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_BoundaryMatrix(benchmark::State& state)
{
    const auto gs = catalog_generators("gl2");
    const int w = static_cast<int>(state.range(0));
    const int m = w + 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(boundary_matrix(gs, m, w).nnz());
}
BENCHMARK(BM_BoundaryMatrix)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state)
{
    const auto gs = catalog_generators("gl2");
    const int w = static_cast<int>(state.range(0));
    const auto d = boundary_matrix(gs, w + 2, w);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(d));
    state.counters["rows"] = static_cast<double>(d.rows());
    state.counters["cols"] = static_cast<double>(d.cols());
}
BENCHMARK(BM_Rank)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_BettiTableHeis3(benchmark::State& state)
{
    const auto gs = catalog_generators("heis3");
    const int wmax = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table(gs, wmax).rows.size());
}
BENCHMARK(BM_BettiTableHeis3)->Arg(5)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
