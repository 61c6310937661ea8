#include <fracdisc/fracdisc.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace fracdisc;

const FdeProblem& problem() {
    static const FdeProblem p = linear_problem(0.5, 1.0, 1.0);
    return p;
}

void BM_PwcUniform(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const TimeGrid grid = uniform_grid(3.0 / static_cast<double>(n), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_pwc(problem(), grid));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PwcUniform)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_PwcNonuniform(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const TimeGrid grid = random_grid(3.0 / static_cast<double>(n), n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_pwc(problem(), grid));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PwcNonuniform)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_GrunwaldLetnikov(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const TimeGrid grid = uniform_grid(3.0 / static_cast<double>(n), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_gl(problem(), grid));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GrunwaldLetnikov)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_ElSayed(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const TimeGrid grid = uniform_grid(3.0 / static_cast<double>(n), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_el_sayed(problem(), grid));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ElSayed)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_MittagLeffler(benchmark::State& state) {
    const double y = -static_cast<double>(state.range(0)) / 4.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mittag_leffler(0.5, y));
    }
}
BENCHMARK(BM_MittagLeffler)->DenseRange(1, 17, 4);

}  // namespace

BENCHMARK_MAIN();
