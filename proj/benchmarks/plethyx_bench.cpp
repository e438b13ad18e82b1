#include <benchmark/benchmark.h>

#include "plethyx/domino.hpp"
#include "plethyx/jdt.hpp"
#include "plethyx/random.hpp"
#include "plethyx/rsk.hpp"
#include "plethyx/sign.hpp"
#include "plethyx/symfunc.hpp"

namespace {

using namespace plethyx;

void BM_DecomposeH(benchmark::State& state) {
    const Partition lambda{static_cast<int>(state.range(0)), 1};
    for (auto _ : state) benchmark::DoNotOptimize(decompose_h_square(lambda));
}
BENCHMARK(BM_DecomposeH)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_DecomposeEThreads(benchmark::State& state) {
    const Partition lambda{3, 2};
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(decompose_e_square(lambda, threads));
}
BENCHMARK(BM_DecomposeEThreads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Rsk(benchmark::State& state) {
    Rng rng = item_rng(1, 0);
    std::vector<Biword> words;
    for (int k = 0; k < 64; ++k) words.push_back(random_biword(rng, static_cast<int>(state.range(0)), 10));
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(rsk(words[k++ % words.size()]));
}
BENCHMARK(BM_Rsk)->RangeMultiplier(4)->Range(16, 256);

void BM_RskTildeRoundTrip(benchmark::State& state) {
    Rng rng = item_rng(2, 0);
    BurgeWord w = random_burge_word(rng, static_cast<int>(state.range(0)), 10);
    for (auto _ : state) benchmark::DoNotOptimize(rsk_tilde_inverse(rsk_tilde(w)));
}
BENCHMARK(BM_RskTildeRoundTrip)->RangeMultiplier(4)->Range(16, 256);

void BM_RectifyProduct(benchmark::State& state) {
    Rng rng = item_rng(3, 0);
    Tableau a = random_straight_tableau(rng, static_cast<int>(state.range(0)), 8);
    Tableau b = random_straight_tableau(rng, static_cast<int>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(product(a, b));
}
BENCHMARK(BM_RectifyProduct)->RangeMultiplier(2)->Range(8, 64);

void BM_SchurExpandSquare(benchmark::State& state) {
    const SymFunc g = generator(SymBasis::h, Partition{static_cast<int>(state.range(0)), 1});
    for (auto _ : state) benchmark::DoNotOptimize(schur_expand(split_square(g).sym));
}
BENCHMARK(BM_SchurExpandSquare)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_YamanouchiDominoes(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_yamanouchi_domino_tableaux(Partition{2 * n, 2 * n}));
}
BENCHMARK(BM_YamanouchiDominoes)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
