// Kernel timings: memoized vs literal shuffles, serial vs OpenMP sweeps,
// and degree-table construction.

#include "lhopf/dual.hpp"
#include "lhopf/reference.hpp"
#include "lhopf/steenrod.hpp"
#include "lhopf/verify.hpp"

#include <benchmark/benchmark.h>

using namespace lhopf;

namespace {

// pi*(xi_1^3 xi_2)-sized operands, scaled by the argument
std::pair<Composition, Composition> operands(int scale) {
    std::vector<std::uint32_t> a, b;
    for (int k = 0; k < scale; ++k) {
        a.push_back(static_cast<std::uint32_t>(1 + k % 3));
        b.push_back(static_cast<std::uint32_t>(2 + k % 2));
    }
    return {Composition(a), Composition(b)};
}

void BM_ShuffleReference(benchmark::State& state) {
    const auto [a, b] = operands(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::overlapping_shuffle(a, b));
}
BENCHMARK(BM_ShuffleReference)->DenseRange(2, 6);

void BM_ShuffleMemoizedCold(benchmark::State& state) {
    const auto [a, b] = operands(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ShuffleAlgebra alg;
        benchmark::DoNotOptimize(alg.shuffle(a, b));
    }
}
BENCHMARK(BM_ShuffleMemoizedCold)->DenseRange(2, 6);

void BM_ChiPartitionsReference(benchmark::State& state) {
    const auto i = xi_sequence(static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::chi_dual_partitions(i));
}
BENCHMARK(BM_ChiPartitionsReference)->DenseRange(2, 5);

void BM_ChiPartitionsMemoized(benchmark::State& state) {
    const auto i = xi_sequence(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        ShuffleAlgebra alg;
        benchmark::DoNotOptimize(alg.chi_partitions(i));
    }
}
BENCHMARK(BM_ChiPartitionsMemoized)->DenseRange(2, 5);

void BM_ChiCoarsening(benchmark::State& state) {
    const auto i = xi_sequence(static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(chi_dual_coarsening(i));
}
BENCHMARK(BM_ChiCoarsening)->DenseRange(2, 5);

void BM_AntipodeSweep(benchmark::State& state) {
    const auto exec = state.range(1) ? Execution::Parallel : Execution::Serial;
    for (auto _ : state)
        benchmark::DoNotOptimize(check_antipode_axiom(Side::Dual, static_cast<unsigned>(state.range(0)), exec));
    state.SetLabel(state.range(1) ? "parallel" : "serial");
}
BENCHMARK(BM_AntipodeSweep)->ArgsProduct({{8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_FormulaSweep(benchmark::State& state) {
    const auto exec = state.range(1) ? Execution::Parallel : Execution::Serial;
    for (auto _ : state)
        benchmark::DoNotOptimize(check_formula_agreement(static_cast<unsigned>(state.range(0)), exec));
    state.SetLabel(state.range(1) ? "parallel" : "serial");
}
BENCHMARK(BM_FormulaSweep)->ArgsProduct({{8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_DegreeTable(benchmark::State& state) {
    for (auto _ : state) {
        ShuffleAlgebra alg;
        benchmark::DoNotOptimize(build_degree_table(static_cast<unsigned>(state.range(0)), alg));
    }
}
BENCHMARK(BM_DegreeTable)->DenseRange(6, 16, 2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
