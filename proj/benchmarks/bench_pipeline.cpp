#include <benchmark/benchmark.h>

#include <fstream>
#include <random>

#include "omfib/arrangement.hpp"
#include "omfib/fibration.hpp"
#include "omfib/homology.hpp"
#include "omfib/io.hpp"
#include "omfib/salvetti.hpp"
#include "omfib/subdivision.hpp"

using namespace omfib;

namespace {

Arrangement load(const std::string& name) {
    std::ifstream in(std::string(OMFIB_BENCH_DATA_DIR) + "/" + name);
    return parse_arrangement(in);
}

const char* kInputs[] = {"hexagon.arr", "b3.arr", "rank3.arr"};

void BM_CovectorEnumeration(benchmark::State& state) {
    Arrangement arr = load(kInputs[state.range(0)]);
    for (auto _ : state) {
        RealizedOM r = from_arrangement(arr);
        benchmark::DoNotOptimize(r.om.covector_count());
    }
}
BENCHMARK(BM_CovectorEnumeration)->DenseRange(0, 2);

void BM_SalvettiConstruction(benchmark::State& state) {
    RealizedOM r = from_arrangement(load(kInputs[state.range(0)]));
    for (auto _ : state) {
        SalvettiComplex s = salvetti_poset(r.om);
        benchmark::DoNotOptimize(s.cells.size());
    }
}
BENCHMARK(BM_SalvettiConstruction)->DenseRange(0, 2);

void BM_RankSubdivision(benchmark::State& state) {
    RealizedOM r = from_arrangement(load(kInputs[state.range(0)]));
    SalvettiComplex s = salvetti_poset(r.om);
    for (auto _ : state) {
        SalvettiSubdivision sd = rank_subdivide_salvetti(r.om, s);
        benchmark::DoNotOptimize(sd.cells.size());
    }
}
BENCHMARK(BM_RankSubdivision)->DenseRange(0, 2);

void BM_FiberHomology(benchmark::State& state) {
    RealizedOM r = from_arrangement(load(kInputs[state.range(0)]));
    SalvettiComplex s = salvetti_poset(r.om);
    SalvettiSubdivision sd = rank_subdivide_salvetti(r.om, s);
    FibrationMap f = fibration(sd);
    Subposet fiber = milnor_fiber(f);
    for (auto _ : state) {
        HomologyReport h = homology(fiber.poset);
        benchmark::DoNotOptimize(h.euler);
    }
}
BENCHMARK(BM_FiberHomology)->DenseRange(0, 2);

void BM_SubdividedHomology(benchmark::State& state) {
    RealizedOM r = from_arrangement(load(kInputs[state.range(0)]));
    SalvettiComplex s = salvetti_poset(r.om);
    SalvettiSubdivision sd = rank_subdivide_salvetti(r.om, s);
    for (auto _ : state) {
        HomologyReport h = homology(sd.poset);
        benchmark::DoNotOptimize(h.euler);
    }
}
BENCHMARK(BM_SubdividedHomology)->DenseRange(0, 2);

void BM_SmithSparse(benchmark::State& state) {
    std::mt19937 rng(42);
    uint32_t n = static_cast<uint32_t>(state.range(0));
    SparseIntMatrix m;
    m.rows = n;
    m.cols = n;
    m.columns.resize(n);
    std::uniform_int_distribution<long long> entry(-2, 2);
    for (uint32_t c = 0; c < n; ++c)
        for (uint32_t r = 0; r < n; ++r) {
            if (rng() % 5) continue;
            long long v = entry(rng);
            if (v) m.columns[c].emplace_back(r, v);
        }
    for (auto _ : state) {
        SmithResult res = smith_sparse(m);
        benchmark::DoNotOptimize(res.rank);
    }
}
BENCHMARK(BM_SmithSparse)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
