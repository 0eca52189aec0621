// Serial reference vs OpenMP sweep kernel on the Gr(3,9) x Gr(5,12)
// instance. The parallel path must produce byte-identical reports; these
// benchmarks measure what the extra threads buy at each sweep size.

#include <benchmark/benchmark.h>

#include "splitquot/quot.hpp"

using namespace splitquot;

namespace {

const QuotEmbedding kEmbedding = stromme_embedding(1, 3, 3, 3);

void BM_VerifyVanishingSerial(benchmark::State& state) {
    const int D = static_cast<int>(state.range(0));
    const int mu_cap = static_cast<int>(state.range(1));
    for (auto _ : state) {
        VanishingReport rep = verify_vanishing_serial(kEmbedding, D, mu_cap);
        benchmark::DoNotOptimize(rep.tuples_checked);
    }
}

void BM_VerifyVanishingParallel(benchmark::State& state) {
    const int D = static_cast<int>(state.range(0));
    const int mu_cap = static_cast<int>(state.range(1));
    const int jobs = static_cast<int>(state.range(2));
    for (auto _ : state) {
        VanishingReport rep = verify_vanishing(kEmbedding, D, mu_cap, jobs);
        benchmark::DoNotOptimize(rep.tuples_checked);
    }
}

} // namespace

BENCHMARK(BM_VerifyVanishingSerial)
    ->Args({2, 6})
    ->Args({3, 6})
    ->Args({3, 9})
    ->Unit(benchmark::kMillisecond);

BENCHMARK(BM_VerifyVanishingParallel)
    ->Args({2, 6, 2})
    ->Args({3, 6, 2})
    ->Args({3, 9, 2})
    ->Args({3, 9, 4})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
