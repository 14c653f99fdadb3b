#include <benchmark/benchmark.h>

#include <sharpdeg/constructions.hpp>
#include <sharpdeg/enumeration.hpp>
#include <sharpdeg/transforms.hpp>

#include <random>

using namespace sharpdeg;

namespace {

NewtonDiagram random_diagram(std::mt19937_64& rng, int n, int d) {
    NewtonDiagram D(n, d);
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            if (rng() % 2) D.set(MultiIndex(cur), (rng() & 1) ? Sign::P : Sign::N);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, d - 1);
    return D;
}

void bm_node_count(benchmark::State& state) {
    std::mt19937_64 rng(42);
    int d = static_cast<int>(state.range(0));
    NewtonDiagram D = random_diagram(rng, 2, d);
    for (auto _ : state) benchmark::DoNotOptimize(node_count(D));
}
BENCHMARK(bm_node_count)->Arg(4)->Arg(8)->Arg(12);

void bm_divide_by_s(benchmark::State& state) {
    Polynomial P = homogenize_and_flip(whitney(3, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(divide_by_s(P));
}
BENCHMARK(bm_divide_by_s)->Arg(4)->Arg(8);

void bm_surface_count(benchmark::State& state) {
    std::mt19937_64 rng(7);
    NewtonDiagram D = random_diagram(rng, 2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(weighted_surface_count_2d(D));
}
BENCHMARK(bm_surface_count)->Arg(6)->Arg(12);

void bm_min_nodes(benchmark::State& state) {
    Support K{2, {}};
    int d = static_cast<int>(state.range(0));
    for (int a = 0; a < d; ++a)
        for (int b = 0; a + b < d; ++b) K.points.insert(MultiIndex{a, b});
    for (auto _ : state) benchmark::DoNotOptimize(min_nodes_over_signs(K, d));
}
BENCHMARK(bm_min_nodes)->Arg(4)->Arg(5);

void bm_whitney(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(whitney(4, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_whitney)->Arg(4)->Arg(8);

void bm_sweep_t34(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_bound_verify(SweepTheorem::T34,
                                                         static_cast<int>(state.range(0))));
}
BENCHMARK(bm_sweep_t34)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
