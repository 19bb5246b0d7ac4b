// Serial reference vs OpenMP path for the sampled kernels.

#include <benchmark/benchmark.h>

#include "qvlab/orders.hpp"
#include "qvlab/quasival.hpp"

using namespace qvlab;
using Q = Rational;
using QD = BaseDomain<Q>;

namespace {

std::vector<Vec<Q>> units(StructureAlgebra<Q> const& alg)
{
    std::vector<Vec<Q>> out;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        out.push_back(alg.basis_element(i));
    return out;
}

Exec exec_of(benchmark::State const& state)
{
    return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void BM_QvAuditM2(benchmark::State& state)
{
    auto m2 = matrix_algebra<Q>(2);
    auto R = left_order(m2, LatticeModule<Q>(QD::local(2), units(m2)));
    auto W = FilterQV<Q>::from_order(m2, R);
    for (auto _ : state)
        benchmark::DoNotOptimize(qv_audit(W, R, AuditSpec::uniform(200, 42), {}, exec_of(state)));
}

void BM_QvAuditComposite(benchmark::State& state)
{
    using T = RatFunc;
    auto m2 = matrix_algebra<T>(2);
    auto S = BaseDomain<T>::valuation_ring(CompositeValuation(2));
    std::vector<Vec<T>> U;
    for (std::size_t i = 0; i < 4; ++i)
        U.push_back(m2.basis_element(i));
    auto R = left_order(m2, LatticeModule<T>(S, U));
    auto W = FilterQV<T>::from_order(m2, R);
    for (auto _ : state)
        benchmark::DoNotOptimize(qv_audit(W, R, AuditSpec::uniform(50, 42), {}, exec_of(state)));
}

void BM_VerifyNiceSqrt2(benchmark::State& state)
{
    auto sq = quadratic_algebra<Q>(Q(2), "r");
    auto R = left_order(sq, LatticeModule<Q>(QD::local(2), {{Q(1), Q(0)}, {Q(0), Q(1) / Q(2)}}));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_nice(sq, R, SampleSpec{400, 7}, exec_of(state)));
}

} // namespace

BENCHMARK(BM_QvAuditM2)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QvAuditComposite)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyNiceSqrt2)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
