#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tpx/galois.hpp"

using namespace tpx;

namespace {

std::vector<FieldElement> random_elements(const Field& f, int count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<FieldElement> v(static_cast<std::size_t>(count));
    for (auto& x : v) x = static_cast<FieldElement>(gen() & (f.order() - 1));
    return v;
}

void BM_mul(benchmark::State& state) {
    Field f(static_cast<int>(state.range(0)));
    std::vector<FieldElement> a = random_elements(f, 1024, 1);
    std::vector<FieldElement> b = random_elements(f, 1024, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.mul(a[i & 1023], b[i & 1023]));
        ++i;
    }
}
BENCHMARK(BM_mul)->Arg(8)->Arg(12)->Arg(16); // table path vs shift-and-reduce

void BM_inv(benchmark::State& state) {
    Field f(static_cast<int>(state.range(0)));
    std::vector<FieldElement> a = random_elements(f, 1024, 3);
    for (auto& x : a) x |= 1; // keep away from zero
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.inv(a[i & 1023]));
        ++i;
    }
}
BENCHMARK(BM_inv)->Arg(8)->Arg(16);

void BM_rank(benchmark::State& state) {
    Field f(8);
    int size = static_cast<int>(state.range(0));
    FieldMatrix m(f, size, size);
    std::mt19937_64 gen(4);
    for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) m.at(r, c) = static_cast<FieldElement>(gen() & 0xFF);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.rank());
    }
}
BENCHMARK(BM_rank)->Arg(10)->Arg(21)->Arg(45); // receiving sizes for n = 5, 7, 10

void BM_solve(benchmark::State& state) {
    Field f(8);
    int size = static_cast<int>(state.range(0));
    std::mt19937_64 gen(5);
    FieldMatrix m(f, size, size);
    do {
        for (int r = 0; r < size; ++r) {
            for (int c = 0; c < size; ++c) m.at(r, c) = static_cast<FieldElement>(gen() & 0xFF);
        }
    } while (m.rank() < size);
    std::vector<FieldElement> b = random_elements(f, size, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.solve(b));
    }
}
BENCHMARK(BM_solve)->Arg(10)->Arg(21);

} // namespace

BENCHMARK_MAIN();
