#include <benchmark/benchmark.h>

#include <random>

#include "pathcover/enumeration.hpp"
#include "pathcover/families.hpp"
#include "pathcover/invariants.hpp"
#include "pathcover/maximality.hpp"

namespace {

using namespace pathcover;

Graph random_graph(int n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (std::uniform_real_distribution<>(0, 1)(rng) < density) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

void BM_Mu(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mu_value(g));
    }
}
BENCHMARK(BM_Mu)->Arg(12)->Arg(16)->Arg(20);

void BM_IsHamiltonian(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_hamiltonian(g));
    }
}
BENCHMARK(BM_IsHamiltonian)->Arg(14)->Arg(18)->Arg(22);

void BM_BruteMu(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_mu(g));
    }
}
BENCHMARK(BM_BruteMu)->Arg(8)->Arg(9)->Arg(10);

void BM_CanonicalForm(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 17);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(g));
    }
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(10)->Arg(12);

void BM_ClassifyWhirligig(benchmark::State& state) {
    int t = static_cast<int>(state.range(0));
    Graph g = whirligig({.t = t, .m = 2 * t - 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(g));
    }
}
BENCHMARK(BM_ClassifyWhirligig)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
