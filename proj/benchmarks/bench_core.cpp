#include "qsing/equivariant.hpp"
#include "qsing/pencil.hpp"
#include "qsing/quotient.hpp"

#include <benchmark/benchmark.h>

using namespace qsing;

namespace {

DualGraph e8_graph() {
    ForkSpec f{-2,
               {ForkArm{HJChain(1, Int(2)), AttachEnd::front},
                ForkArm{HJChain(2, Int(2)), AttachEnd::front},
                ForkArm{HJChain(4, Int(2)), AttachEnd::front}}};
    return realize_fork(f);
}

void bm_hj_expand(benchmark::State& state) {
    Int n = 1000000007, d = 123456789;
    for (auto _ : state) benchmark::DoNotOptimize(hj_expand(n, d));
}

void bm_standard_completion(benchmark::State& state) {
    CyclicQuotientType t(60, 37);
    for (auto _ : state) benchmark::DoNotOptimize(build_standard_completion(t));
}

void bm_log_canonical(benchmark::State& state) {
    StandardCompletion sc = build_standard_completion(CyclicQuotientType(60, 37));
    for (auto _ : state) benchmark::DoNotOptimize(log_canonical_class(sc));
}

void bm_freeness_defect(benchmark::State& state) {
    ForkSpec f{-2,
               {ForkArm{HJChain(1, Int(2)), AttachEnd::front},
                ForkArm{HJChain(2, Int(2)), AttachEnd::front},
                ForkArm{HJChain(4, Int(2)), AttachEnd::front}}};
    StandardCompletion sc = build_standard_completion(f);
    for (auto _ : state) benchmark::DoNotOptimize(freeness_defect(sc));
}

void bm_fundamental_cycle(benchmark::State& state) {
    DualGraph g = e8_graph();
    for (auto _ : state) benchmark::DoNotOptimize(fundamental_cycle(g));
}

void bm_resolve_pencil(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(resolve_pencil(5, 4));
}

void bm_certify(benchmark::State& state) {
    SparsePoly f = parse_poly("x + y^3");
    SparsePoly g = parse_poly("y");
    GroupAction act(2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(certify({f, g}, act));
}

BENCHMARK(bm_hj_expand);
BENCHMARK(bm_standard_completion);
BENCHMARK(bm_log_canonical);
BENCHMARK(bm_freeness_defect);
BENCHMARK(bm_fundamental_cycle);
BENCHMARK(bm_resolve_pencil);
BENCHMARK(bm_certify);

} // namespace

BENCHMARK_MAIN();
