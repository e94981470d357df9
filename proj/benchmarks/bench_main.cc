#include <idcodes/bounds.hh>
#include <idcodes/constructions.hh>
#include <idcodes/lattice.hh>
#include <idcodes/search.hh>
#include <idcodes/verifier.hh>

#include <benchmark/benchmark.h>

using namespace idcodes;

static void bm_verify_theorem5(benchmark::State & state)
{
    auto n = static_cast<int>(state.range(0));
    auto r = static_cast<Coord>(state.range(1));
    auto code = theorem5_code(theorem5_params(n, r));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_identifying(code, r));
}
BENCHMARK(bm_verify_theorem5)->Args({2, 4})->Args({3, 5})->Args({4, 3})->Args({4, 7})->Unit(benchmark::kMillisecond);

static void bm_verify_threads(benchmark::State & state)
{
    auto code = theorem5_code(theorem5_params(4, 7));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_identifying(code, 7, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(bm_verify_threads)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

static void bm_ball_size(benchmark::State & state)
{
    for (auto _ : state)
        for (int n = 1 ; n <= 12 ; ++n)
            for (Coord r = 0 ; r <= 12 ; ++r)
                benchmark::DoNotOptimize(ball_size(n, r));
}
BENCHMARK(bm_ball_size);

static void bm_king_search(benchmark::State & state)
{
    SearchBudget budget;
    budget.period_schedule = {{3, 3}, {6, 3}, {3, 6}, {6, 6}};
    for (auto _ : state)
        benchmark::DoNotOptimize(search_king_schedule(Rational(2, 9), budget));
}
BENCHMARK(bm_king_search)->Unit(benchmark::kMillisecond);

static void bm_domset_search(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(search_min_dominating_set(static_cast<int>(state.range(0)), SearchBudget{}));
}
BENCHMARK(bm_domset_search)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
