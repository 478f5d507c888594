#include <benchmark/benchmark.h>

#include "cambrian/formulas.hpp"
#include "cambrian/heap.hpp"
#include "cambrian/networks.hpp"
#include "cambrian/two_cover.hpp"

using namespace cambrian;

static void BM_BuildSystem(benchmark::State& state, const char* name) {
    for (auto _ : state) {
        CoxeterSystem sys(CoxeterType::parse(name));
        benchmark::DoNotOptimize(sys.num_roots());
    }
}
BENCHMARK_CAPTURE(BM_BuildSystem, A8, "A8");
BENCHMARK_CAPTURE(BM_BuildSystem, E8, "E8");
BENCHMARK_CAPTURE(BM_BuildSystem, H4, "H4");
BENCHMARK_CAPTURE(BM_BuildSystem, I2_64, "I2:m=64");

static void BM_SortingWord(benchmark::State& state) {
    CoxeterSystem sys(CoxeterType::parse("E8"));
    CoxeterElement c = bipartite_element(sys);
    for (auto _ : state) benchmark::DoNotOptimize(c_sorting_word(sys, c).letters.size());
}
BENCHMARK(BM_SortingWord);

static void BM_IdealCount(benchmark::State& state, const char* name) {
    CoxeterSystem sys(CoxeterType::parse(name));
    CoxeterElement c = bipartite_element(sys);
    Heap heap = build_heap(c_sorting_word(sys, c), sys);
    for (auto _ : state) benchmark::DoNotOptimize(count_ideals(heap));
}
BENCHMARK_CAPTURE(BM_IdealCount, A7_alt, "A7");
BENCHMARK_CAPTURE(BM_IdealCount, E8_alt, "E8");

static void BM_CutPathEngine(benchmark::State& state, const char* name) {
    CoxeterSystem sys(CoxeterType::parse(name));
    CoxeterElement c = bipartite_element(sys);
    for (auto _ : state) {
        TwoCover tc(sys, c);
        benchmark::DoNotOptimize(singleton_count_cutpaths(tc));
    }
}
BENCHMARK_CAPTURE(BM_CutPathEngine, E6, "E6");
BENCHMARK_CAPTURE(BM_CutPathEngine, E8, "E8");

static void BM_NetworkEngine(benchmark::State& state) {
    std::vector<int> up{2, 4, 6, 8};
    for (auto _ : state) benchmark::DoNotOptimize(count_singletons_network(build_kernel(8, up)));
}
BENCHMARK(BM_NetworkEngine);

BENCHMARK_MAIN();
