// Serial reference kernel vs the OpenMP-sharded survey.
#include <benchmark/benchmark.h>

#include "ducci/builder.hpp"
#include "ducci/core.hpp"
#include "ducci/survey.hpp"

namespace {

void BM_ExhaustiveSerial(benchmark::State& state) {
    const auto bound = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ducci::exhaustive_survey_serial(4, bound));
}
BENCHMARK(BM_ExhaustiveSerial)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveParallel(benchmark::State& state) {
    const auto bound = static_cast<std::uint64_t>(state.range(0));
    const auto jobs = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(ducci::exhaustive_survey(4, bound, jobs));
}
BENCHMARK(BM_ExhaustiveParallel)->Args({12, 2})->Args({12, 4})->Args({24, 2})->Args({24, 4})->Unit(benchmark::kMillisecond);

void BM_RandomSurvey(benchmark::State& state) {
    const auto jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ducci::random_survey(4, 100, 10'000, 1, jobs));
}
BENCHMARK(BM_RandomSurvey)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Life(benchmark::State& state) {
    const auto t = ducci::build_with_life(4, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ducci::life(t));
}
BENCHMARK(BM_Life)->Arg(20)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
