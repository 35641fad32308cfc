#include <benchmark/benchmark.h>

#include <random>

#include "exacthh/matrix.hpp"

using namespace exacthh;

namespace {

Matrix random_matrix(FieldSpec F, int r, int c, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-3, 3);
    Matrix m(F, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = F.from_int(d(rng));
    return m;
}

void BM_rank_rational(benchmark::State& state) {
    FieldSpec Q(0);
    Matrix m = random_matrix(Q, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank_rational)->Arg(32)->Arg(64)->Arg(128);

void BM_rank_fp(benchmark::State& state) {
    FieldSpec F(10007);
    Matrix m = random_matrix(F, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank_fp)->Arg(32)->Arg(64)->Arg(128);

} // namespace

BENCHMARK_MAIN();
