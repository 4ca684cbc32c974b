#include <hypfib/hquat.hpp>
#include <hypfib/kfib.hpp>

#include <benchmark/benchmark.h>

using namespace hypfib;

static void BM_FibIterative(benchmark::State& state)
{
    const auto mode = KMode::numeric(1);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fib_pair_iterative(mode, n));
}
BENCHMARK(BM_FibIterative)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

static void BM_FibDoubling(benchmark::State& state)
{
    const auto mode = KMode::numeric(1);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fib_pair_doubling(mode, n));
}
BENCHMARK(BM_FibDoubling)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

static void BM_SymbolicFib(benchmark::State& state)
{
    const auto n = state.range(0);
    for (auto _ : state) {
        SeqCache cache(KMode::symbolic());
        benchmark::DoNotOptimize(cache.fib(n));
    }
}
BENCHMARK(BM_SymbolicFib)->Arg(10)->Arg(40)->Arg(-40);

static void BM_HQuatMul(benchmark::State& state)
{
    SeqCache cache(KMode::symbolic());
    const auto a = hfib(cache, state.range(0));
    const auto b = hfib(cache, state.range(0) + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(hq_mul(a, b));
}
BENCHMARK(BM_HQuatMul)->Arg(5)->Arg(25);

static void BM_HQuatMulTable(benchmark::State& state)
{
    SeqCache cache(KMode::symbolic());
    const auto a = hfib(cache, state.range(0));
    const auto b = hfib(cache, state.range(0) + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(hq_mul_table(a, b));
}
BENCHMARK(BM_HQuatMulTable)->Arg(5)->Arg(25);

BENCHMARK_MAIN();
