#include <benchmark/benchmark.h>

#include "bruhat/decompose.hpp"
#include "bruhat/sampler.hpp"
#include "bruhat/series.hpp"
#include "bruhat/suites.hpp"

using namespace bruhat;

namespace {

void BM_padic_mul(benchmark::State& state) {
    unsigned prec = static_cast<unsigned>(state.range(0));
    PAdic a = PAdic::from_rational(123457, 7, 3, prec);
    PAdic b = PAdic::from_rational(98765, 11, 3, prec);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_padic_mul)->Arg(64)->Arg(256);

void BM_padic_inv(benchmark::State& state) {
    PAdic a = PAdic::from_rational(123457, 7, 3, 64);
    for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_padic_inv);

void BM_rb_decompose(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SampleBounds bounds;
    Rng rng(1);
    PMatrix g = random_invertible(rng, n, 3, 64, bounds);
    for (auto _ : state) benchmark::DoNotOptimize(rb_decompose(g));
}
BENCHMARK(BM_rb_decompose)->Arg(3)->Arg(4);

void BM_mat_inv(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SampleBounds bounds;
    Rng rng(2);
    PMatrix g = random_invertible(rng, n, 3, 64, bounds);
    for (auto _ : state) benchmark::DoNotOptimize(mat_inv(g));
}
BENCHMARK(BM_mat_inv)->Arg(3)->Arg(4);

void BM_bruhat_leq(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto ws = all_weyl(n);
    size_t i = 0;
    for (auto _ : state) {
        const WeylElement& u = ws[i % ws.size()];
        const WeylElement& w = ws[(i * 7 + 3) % ws.size()];
        benchmark::DoNotOptimize(bruhat_leq(u, w));
        ++i;
    }
}
BENCHMARK(BM_bruhat_leq)->Arg(4)->Arg(6);

void BM_eval_fw(benchmark::State& state) {
    Character chi = default_character(3, 3);
    WeylElement w = WeylElement::parse("2,3,1");
    SampleBounds bounds;
    PMatrix x = sample_cell(w, bounds, 3, 64, 5, 0);
    for (auto _ : state) benchmark::DoNotOptimize(eval_fw(chi, w, x));
}
BENCHMARK(BM_eval_fw);

void BM_counterexample_eval(benchmark::State& state) {
    Character chi = default_character(3, 3);
    Counterexample ce = build_counterexample(chi, 64);
    for (auto _ : state) benchmark::DoNotOptimize(ce.f.eval(ce.z));
}
BENCHMARK(BM_counterexample_eval);

} // namespace

BENCHMARK_MAIN();
