#include <benchmark/benchmark.h>

#include <random>

#include "smashquot/lattice.hpp"

using namespace smashquot;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long bound) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    return m;
}

}  // namespace

static void BM_hnf(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::size_t n = state.range(0);
    std::vector<IntMatrix> inputs;
    for (int i = 0; i < 16; ++i) inputs.push_back(random_matrix(rng, n, 50));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hnf(inputs[k++ % inputs.size()]));
    }
}
BENCHMARK(BM_hnf)->Arg(4)->Arg(8)->Arg(16);

static void BM_snf(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::size_t n = state.range(0);
    std::vector<IntMatrix> inputs;
    for (int i = 0; i < 16; ++i) inputs.push_back(random_matrix(rng, n, 50));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(snf(inputs[k++ % inputs.size()]));
    }
}
BENCHMARK(BM_snf)->Arg(4)->Arg(8)->Arg(16);

static void BM_kernel_of_unit_map(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::size_t n = state.range(0);
    IntMatrix a(n, 3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = static_cast<long>(rng() % 21) - 10;
    std::vector<std::optional<Int>> orders{Int(12), Int(30), std::nullopt};
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_of_unit_map(a, orders));
    }
}
BENCHMARK(BM_kernel_of_unit_map)->Arg(4)->Arg(8)->Arg(16);

static void BM_quotient_structure(benchmark::State& state) {
    std::mt19937_64 rng(4);
    std::size_t n = state.range(0);
    SubgroupHNF s = hnf(random_matrix(rng, n, 20));
    for (auto _ : state) {
        benchmark::DoNotOptimize(quotient_structure(n, s));
    }
}
BENCHMARK(BM_quotient_structure)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
