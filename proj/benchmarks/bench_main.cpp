#include <coxl2/builtins.hpp>
#include <coxl2/finite_hecke.hpp>
#include <coxl2/growth.hpp>
#include <coxl2/weighted.hpp>

#include <benchmark/benchmark.h>

using namespace coxl2;

namespace {

const char* kSystems[] = {"b3", "h3", "f4", "pentagon", "triangle-(2,3,7)", "dodecahedral", "octahedral"};

void BM_GrowthData(benchmark::State& state)
{
    CoxeterSystem w = builtin_system(kSystems[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(GrowthData(w).inverse_series());
    state.SetLabel(kSystems[state.range(0)]);
}
BENCHMARK(BM_GrowthData)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_BallEnumeration(benchmark::State& state)
{
    CoxeterSystem w = builtin_system("triangle-(2,3,7)");
    for (auto _ : state) {
        // a fresh system, so the word-problem memo starts cold
        benchmark::DoNotOptimize(CoxeterSystem(w.labels(), w.matrix()).enumerate_ball(state.range(0)));
    }
}
BENCHMARK(BM_BallEnumeration)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_HeckeIdempotent(benchmark::State& state)
{
    CoxeterSystem w = builtin_system(state.range(0) ? "b3" : "a3");
    HeckeAlgebra<Rational> h(w, {Rational(3)});
    for (auto _ : state) {
        auto a = h.idempotent_a(w.all());
        benchmark::DoNotOptimize(h.multiply(a, a));
    }
}
BENCHMARK(BM_HeckeIdempotent)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Solomon(benchmark::State& state)
{
    CoxeterSystem w = builtin_system(state.range(0) ? "b3" : "a2");
    for (auto _ : state) benchmark::DoNotOptimize(verify_solomon(WeightedSpace(w, {Rational(2)})).ok());
}
BENCHMARK(BM_Solomon)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BettiFormula(benchmark::State& state)
{
    CoxeterSystem w = builtin_system(state.range(0) ? "example-existence-m10" : "dodecahedral");
    GrowthData g(w);
    MirroredComplex k = chamber(w);
    for (auto _ : state) benchmark::DoNotOptimize(betti_formula(k, g, {Rational(30)}));
}
BENCHMARK(BM_BettiFormula)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DirectBettiFinite(benchmark::State& state)
{
    CoxeterSystem w = builtin_system(state.range(0) ? "b2" : "a2");
    GrowthData g(w);
    MirroredComplex k = chamber(w);
    for (auto _ : state) benchmark::DoNotOptimize(direct_betti_finite(k, g, {Rational(2)}));
}
BENCHMARK(BM_DirectBettiFinite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
