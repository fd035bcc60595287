#include <benchmark/benchmark.h>

#include "deltahall/checks.hpp"

using namespace deltahall;

namespace {

const Quiver kA2{2, {{0, 1}}};

void BM_CatalogEnumerate(benchmark::State& state) {
    long q = state.range(0);
    int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        Catalog cat = Catalog::enumerate(kA2, q, d);
        benchmark::DoNotOptimize(cat.size());
    }
}
BENCHMARK(BM_CatalogEnumerate)->Args({2, 3})->Args({3, 3})->Args({2, 4});

void BM_TableFill(benchmark::State& state) {
    Catalog cat = Catalog::enumerate(kA2, 2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        HallTables t(cat, static_cast<int>(state.range(1)));
        benchmark::DoNotOptimize(t.aut(cat.size() - 1));
    }
}
BENCHMARK(BM_TableFill)->Args({3, 1})->Args({3, 4})->Args({4, 1})->Args({4, 4});

void BM_WeightedHallNumbers(benchmark::State& state) {
    Catalog cat = Catalog::enumerate(kA2, 2, 3);
    HallTables t(cat, 1);
    for (auto _ : state) {
        QuadNumber acc;
        for (int a = 0; a < cat.size(); ++a)
            for (int b = 0; b < cat.size(); ++b)
                for (int m = 0; m < cat.size(); ++m)
                    acc += delta_hall_number(t, a, b, m);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_WeightedHallNumbers);

void BM_GreenSweep(benchmark::State& state) {
    Catalog cat = Catalog::enumerate(kA2, 2, 2);
    HallTables t(cat, 1);
    for (auto _ : state) {
        CheckReport rep = run_check("green", t);
        benchmark::DoNotOptimize(rep.checked);
    }
}
BENCHMARK(BM_GreenSweep);

}  // namespace
