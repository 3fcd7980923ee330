#include "schub/code.hpp"
#include "schub/interpolate.hpp"
#include "schub/lr.hpp"
#include "schub/poly.hpp"
#include "schub/schubert.hpp"
#include "schub/skew.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace schub;

void BM_expand_transition(benchmark::State& state)
{
    const Code v = Code::parse("2,0,3");
    for (auto _ : state)
        benchmark::DoNotOptimize(schubert_expand_transition(v));
}
BENCHMARK(BM_expand_transition);

void BM_expand_dd(benchmark::State& state)
{
    const Code v = Code::parse("2,0,3");
    for (auto _ : state)
        benchmark::DoNotOptimize(schubert_expand_dd(v));
}
BENCHMARK(BM_expand_dd);

void BM_schubert_eval(benchmark::State& state)
{
    SchubertEvaluator evaluator(Code::parse("2,0,3"));
    const Point a = {5, 3, 7};
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluator.eval(a));
}
BENCHMARK(BM_schubert_eval);

void BM_skew_expand(benchmark::State& state)
{
    const Code v = Code::parse("1");
    const Code w = Code::parse("3,2,1");
    for (auto _ : state)
        benchmark::DoNotOptimize(skew_expand(v, w));
}
BENCHMARK(BM_skew_expand);

void BM_interpolate(benchmark::State& state)
{
    const int n = 2;
    const BasisDescriptor basis = schubert_basis(n);
    SparsePolynomial f(n);
    f += basis.expand_oracle(Code::parse("0,2")) * 3;
    f += basis.expand_oracle(Code::parse("1,1")) * 2;
    BlackBox bb;
    bb.nvars = n;
    bb.eval = [&f](const Point& a) -> Int { return f.evaluate(a); };
    for (auto _ : state)
        benchmark::DoNotOptimize(interpolate(bb, basis, n, 2, 2));
}
BENCHMARK(BM_interpolate);

void BM_lr_product(benchmark::State& state)
{
    const Code u = Code::parse("0,1");
    const Code v = Code::parse("0,1");
    for (auto _ : state)
        benchmark::DoNotOptimize(lr_expand_product(u, v, 2));
}
BENCHMARK(BM_lr_product);

} // namespace

BENCHMARK_MAIN();
