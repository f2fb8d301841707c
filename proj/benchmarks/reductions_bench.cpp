#include <benchmark/benchmark.h>

#include <random>

#include "rkl/diagonal.hpp"
#include "rkl/oracles.hpp"
#include "rkl/reductions.hpp"

namespace {

rkl::PairColoring random_coloring(rkl::Nat n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return rkl::PairColoring::from_function(n, [&](rkl::Nat, rkl::Nat) {
        return rkl::to_color(static_cast<int>(rng() & 1U));
    });
}

void BM_RamseySearch(benchmark::State& state) {
    const auto n = static_cast<rkl::Nat>(state.range(0));
    auto f = random_coloring(n, 42);
    for (auto _ : state) benchmark::DoNotOptimize(rkl::ramsey_search(f, 3));
}
BENCHMARK(BM_RamseySearch)->DenseRange(8, 32, 8);

void BM_TreeToStableColoring(benchmark::State& state) {
    const auto n = static_cast<rkl::Nat>(state.range(0));
    std::mt19937_64 rng(7);
    rkl::FinTree::Members paths;
    for (int i = 0; i < 8; ++i) {
        rkl::BitString s;
        for (rkl::Nat j = 0; j < n; ++j) s.push_back(rkl::to_color(static_cast<int>(rng() & 1U)));
        paths.insert(s);
    }
    auto t = rkl::FinTree::close(paths);
    for (auto _ : state) benchmark::DoNotOptimize(rkl::tree_to_stable_coloring(t, n));
}
BENCHMARK(BM_TreeToStableColoring)->RangeMultiplier(2)->Range(16, 256);

void BM_DiagonalTree(benchmark::State& state) {
    const auto depth = static_cast<rkl::Nat>(state.range(0));
    std::vector<rkl::EnumEvent> events;
    for (rkl::Nat e = 0; e < 4; ++e)
        for (rkl::Nat i = 0; i < e + 3; ++i) events.push_back({e, 2 * i + 1, 3 * i + e});
    rkl::StagedEnum enums(std::move(events));
    for (auto _ : state) benchmark::DoNotOptimize(rkl::build_diagonal_tree(enums, depth));
}
BENCHMARK(BM_DiagonalTree)->DenseRange(8, 16, 4);

void BM_YokoyamaColoring(benchmark::State& state) {
    const auto n = static_cast<rkl::Nat>(state.range(0));
    rkl::TernaryPredicate even = [](rkl::Nat x, rkl::Nat m, rkl::Nat k) { return x % 2 == 0 && k >= m; };
    rkl::TernaryPredicate odd = [](rkl::Nat x, rkl::Nat m, rkl::Nat k) { return x % 2 == 1 && k >= m; };
    for (auto _ : state) benchmark::DoNotOptimize(rkl::yokoyama_coloring(even, odd, n, 4 * n));
}
BENCHMARK(BM_YokoyamaColoring)->RangeMultiplier(2)->Range(8, 64);

} // namespace

BENCHMARK_MAIN();
