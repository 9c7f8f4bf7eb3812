#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tpx/feasibility.hpp"
#include "tpx/solver.hpp"

using namespace tpx;

namespace {

ExchangeProblem random_problem(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<Rational> costs;
    costs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) costs.emplace_back(static_cast<std::int64_t>(gen() % 50) + 1);
    return ExchangeProblem(n, std::move(costs));
}

void BM_solve_min_cost(benchmark::State& state) {
    ExchangeProblem problem = random_problem(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_min_cost(problem));
    }
}
BENCHMARK(BM_solve_min_cost)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void BM_brute_force(benchmark::State& state) {
    ExchangeProblem problem = random_problem(static_cast<int>(state.range(0)), 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_solve(problem));
    }
}
BENCHMARK(BM_brute_force)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_is_feasible(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<int> y(static_cast<std::size_t>(n));
    y[0] = n - 2;
    for (int i = 1; i < n; ++i) y[static_cast<std::size_t>(i)] = n - 1 - i;
    TransmissionScheme scheme(y);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_feasible(n, scheme));
    }
}
BENCHMARK(BM_is_feasible)->Arg(6)->Arg(12)->Arg(20);

void BM_structural_certificate(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<int> y(static_cast<std::size_t>(n));
    y[0] = n - 2;
    for (int i = 1; i < n; ++i) y[static_cast<std::size_t>(i)] = n - 1 - i;
    TransmissionScheme scheme(y);
    for (auto _ : state) {
        benchmark::DoNotOptimize(structural_certificate(n, scheme));
    }
}
BENCHMARK(BM_structural_certificate)->Arg(5)->Arg(8);

} // namespace

BENCHMARK_MAIN();
