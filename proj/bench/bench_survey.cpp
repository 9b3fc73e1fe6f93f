// Serial reference against the OpenMP sample pool on the same instances.

#include <benchmark/benchmark.h>

#include "ginvlab/rol.hpp"

using namespace ginvlab;

namespace {

SurveyOptions options(ExecutionPolicy policy, std::size_t budget) {
    SurveyOptions opt;
    opt.budget = budget;
    opt.policy = policy;
    return opt;
}

void pool(benchmark::State& state, ExecutionPolicy policy) {
    auto inst = random_instance(42, 4, 3, 2, state.range(1) != 0);
    auto opt = options(policy, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        SamplePool p(inst, opt);
        benchmark::DoNotOptimize(p.lhs(GInvClass::G1).size());
    }
    // seven sampled classes on each side plus the two Moore-Penrose members
    state.SetItemsProcessed(state.iterations() * (14 * state.range(0) + 2));
}

void survey(benchmark::State& state, ExecutionPolicy policy) {
    auto inst = random_instance(7, 4, 3, static_cast<std::size_t>(state.range(1)), false);
    auto opt = options(policy, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(survey_reports(inst, opt));
}

void pool_serial(benchmark::State& s) { pool(s, ExecutionPolicy::Serial); }
void pool_parallel(benchmark::State& s) { pool(s, ExecutionPolicy::Parallel); }
void survey_serial(benchmark::State& s) { survey(s, ExecutionPolicy::Serial); }
void survey_parallel(benchmark::State& s) { survey(s, ExecutionPolicy::Parallel); }

}  // namespace

BENCHMARK(pool_serial)->ArgsProduct({{16, 64}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(pool_parallel)->ArgsProduct({{16, 64}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(survey_serial)->ArgsProduct({{16, 64}, {1, 2}})->Unit(benchmark::kMillisecond);
BENCHMARK(survey_parallel)->ArgsProduct({{16, 64}, {1, 2}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
