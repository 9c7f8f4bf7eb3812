#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "tpx/coding.hpp"
#include "tpx/rng.hpp"
#include "tpx/simulate.hpp"
#include "tpx/solver.hpp"

using namespace tpx;

namespace {

TransmissionScheme fewest(int n) { return solve_min_transmissions(n).scheme; }

void BM_random_code(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Field f(8);
    TransmissionScheme scheme = fewest(n);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(random_code(n, scheme, f, seed++));
    }
}
BENCHMARK(BM_random_code)->Arg(4)->Arg(8)->Arg(12);

void BM_construct_verified(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Field f(8);
    TransmissionScheme scheme = fewest(n);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(construct_verified_code(n, scheme, f, seed++, 64));
    }
}
BENCHMARK(BM_construct_verified)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_encode_decode(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Field f(8);
    VerifiedCode code = construct_verified_code(n, fewest(n), f, 7, 64);
    PacketUniverse universe = packet_universe(n);
    std::vector<FieldElement> natives;
    for (std::size_t r = 0; r < universe.packets.size(); ++r) {
        natives.push_back(static_cast<FieldElement>(derive_seed(3, r) & 0xFF));
    }
    ClientId client(1);
    std::map<PacketId, FieldElement> known;
    for (const PacketId& p : held_packets(n, client)) {
        known[p] = natives[static_cast<std::size_t>(universe.row_of(p))];
    }
    ReceivingMatrix view = receiving_matrix(code.matrix, client);
    for (auto _ : state) {
        std::vector<FieldElement> transmitted = encode(code.matrix, natives);
        std::vector<FieldElement> received;
        received.reserve(view.col_sources.size());
        for (int c : view.col_sources) received.push_back(transmitted[static_cast<std::size_t>(c)]);
        benchmark::DoNotOptimize(decode(code.matrix, client, received, known));
    }
}
BENCHMARK(BM_encode_decode)->Arg(4)->Arg(8);

void BM_run_trials(benchmark::State& state) {
    const int n = 6;
    Field f(8);
    TransmissionScheme scheme = fewest(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trials(n, scheme, f, static_cast<int>(state.range(0)), 1));
    }
}
BENCHMARK(BM_run_trials)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
