#include <benchmark/benchmark.h>

#include "smashquot/hopf_image.hpp"
#include "smashquot/json_io.hpp"

using namespace smashquot;

namespace {

QSpec q22(long m) {
    QSpec q;
    q.M = q.N = 2;
    q.spec = make_unit_group({{"q", Int(m)}});
    UnitValue one = UnitValue::one(q.spec);
    q.Q = {{one, one}, {one, UnitValue::generator(q.spec, 0)}};
    return q;
}

TwistedBuild family(long m, bool twisted) {
    auto ctx = std::make_shared<const GammaContext>(2, 2);
    return build_twisted_quotient(ctx, dihedral_family_datum(*ctx, Int(m), twisted));
}

}  // namespace

static void BM_build_twisted_quotient(benchmark::State& state) {
    long m = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(family(m, true));
    }
}
BENCHMARK(BM_build_twisted_quotient)->Arg(4)->Arg(12)->Arg(25);

static void BM_verify_hopf_axioms(benchmark::State& state) {
    TwistedBuild tb = family(state.range(0), true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_hopf_axioms(tb.hopf));
    }
}
BENCHMARK(BM_verify_hopf_axioms)->Arg(2)->Arg(4)->Arg(6);

static void BM_hopf_image_22(benchmark::State& state) {
    QSpec q = q22(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hopf_image(q));
    }
}
BENCHMARK(BM_hopf_image_22)->Arg(7)->Arg(12)->Arg(24);

static void BM_exact_sequence(benchmark::State& state) {
    TwistedBuild tb = family(state.range(0), false);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_exact_sequence(tb));
    }
}
BENCHMARK(BM_exact_sequence)->Arg(4)->Arg(8);

static void BM_character_group(benchmark::State& state) {
    TwistedBuild tb = family(state.range(0), false);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_character_group(tb.hopf, 4));
    }
}
BENCHMARK(BM_character_group)->Arg(1)->Arg(2);
