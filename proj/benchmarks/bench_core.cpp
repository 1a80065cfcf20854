#include "sfroot/bounds.hpp"
#include "sfroot/caseanalysis.hpp"
#include "sfroot/charsum.hpp"
#include "sfroot/counting.hpp"
#include "sfroot/scan.hpp"
#include "sfroot/sieve.hpp"

#include <benchmark/benchmark.h>

using namespace sfroot;

static void BM_IsPrime(benchmark::State& state)
{
    nt::u64 n = 2'500'000'000'000'001ULL;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nt::is_prime(n));
        n += 2;
    }
}
BENCHMARK(BM_IsPrime);

static void BM_FactorSemiprime(benchmark::State& state)
{
    const nt::u64 n = 1'000'000'007ULL * 998'244'353ULL;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nt::factor(n));
    }
}
BENCHMARK(BM_FactorSemiprime);

static void BM_LeastSquarefreeRoot(benchmark::State& state)
{
    const nt::PrimeContext ctx(2'513'954'577'154'021ULL);
    for (auto _ : state) {
        benchmark::DoNotOptimize(counting::least_squarefree_primroot(ctx));
    }
}
BENCHMARK(BM_LeastSquarefreeRoot);

static void BM_SquarefreeCount(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(nt::squarefree_count(static_cast<nt::u64>(state.range(0))));
    }
}
BENCHMARK(BM_SquarefreeCount)->Arg(1'000'000)->Arg(1'000'000'000);

static void BM_IndicatorPrimroot(benchmark::State& state)
{
    const auto table = charsum::make_index_table(nt::PrimeContext(1999));
    nt::u64 n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(charsum::indicator_primroot(table, n));
        n = n % 1998 + 1;
    }
}
BENCHMARK(BM_IndicatorPrimroot);

static void BM_EvalGs(benchmark::State& state)
{
    const auto delta = bounds::worst_case_delta(13, 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounds::eval_Gs(3.4e15, 0.96, 3, delta, 10));
    }
}
BENCHMARK(BM_EvalGs);

static void BM_Threshold(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounds::threshold_p(0.96, 13, 10));
    }
}
BENCHMARK(BM_Threshold)->Unit(benchmark::kMillisecond);

static void BM_ConjectureScan(benchmark::State& state)
{
    scan::ScanOptions opt;
    opt.jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan::run_scan(scan::ScanKind::SquarefreeConjecture, 2, 1'000'000, opt));
    }
}
BENCHMARK(BM_ConjectureScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Omega13Slice(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            cases::omega13_pipeline(0.96, 2'500'000'000'000'000ULL, 2'510'000'000'000'000ULL, 1));
    }
}
BENCHMARK(BM_Omega13Slice)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
