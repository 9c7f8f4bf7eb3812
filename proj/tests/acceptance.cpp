// Release gate: every criterion below must hold, each within its time
// budget. One [PASS]/[FAIL] line per criterion; exit 0 only if all pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "tpx/coding.hpp"
#include "tpx/feasibility.hpp"
#include "tpx/galois.hpp"
#include "tpx/model.hpp"
#include "tpx/rng.hpp"
#include "tpx/simulate.hpp"
#include "tpx/solver.hpp"

using namespace tpx;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int number, const std::string& what, bool ok, double elapsed, double budget) {
    bool in_time = elapsed < budget;
    const char* tag = ok && in_time ? "[PASS]" : "[FAIL]";
    if (!(ok && in_time)) ++g_failures;
    std::printf("%s %d %s (%.2f s of %.0f s budget)%s\n", tag, number, what.c_str(), elapsed,
                budget, ok ? "" : " -- check failed");
    std::fflush(stdout);
}

std::string run_cli(const std::string& args, int* status) {
    std::string cmd = std::string(TPX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *status = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    *status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return out;
}

// --- 1: the ten rounded lower-bound cells, through the CLI ----------------

void criterion_bound_table() {
    auto start = Clock::now();
    int status = -1;
    std::string out = run_cli("bound-table", &status);
    bool ok = status == 0;
    const char* cells[] = {"4\t0.9883\t0.9941", "6\t0.9609\t0.9805", "8\t0.9180\t0.9590",
                           "10\t0.8594\t0.9297", "12\t0.7852\t0.8926"};
    for (const char* row : cells) ok = ok && out.find(row) != std::string::npos;
    report(1, "bound table: all ten four-decimal cells exact", ok, seconds_since(start), 1.0);
}

// --- 2: the 9-versus-10 cost pair on costs (1,2,3,4) ----------------------

void criterion_cost_pair() {
    auto start = Clock::now();
    ExchangeProblem problem(4, {Rational(1), Rational(2), Rational(3), Rational(4)});
    OptimalScheme best = solve_min_cost(problem);
    OptimalScheme fewest = solve_min_transmissions(4);
    bool ok = best.cost == Rational(9) && fewest.total_transmissions == 4 &&
              total_cost(problem, fewest.scheme) == Rational(10);
    report(2, "cost optimum 9 vs transmission-minimal cost 10", ok, seconds_since(start), 1.0);
}

// --- 3: production solver against the exhaustive reference ----------------

void criterion_solver_oracle() {
    auto start = Clock::now();
    std::mt19937_64 gen(derive_seed(0xacce97, 3));
    bool ok = true;
    int instances = 0;
    for (int n = 3; n <= 7; ++n) {
        int count = n == 7 ? 20 : 200;
        for (int trial = 0; trial < count && ok; ++trial) {
            std::vector<Rational> costs;
            for (int i = 0; i < n; ++i) {
                costs.emplace_back(static_cast<std::int64_t>(gen() % 9) + 1);
            }
            ExchangeProblem problem(n, std::move(costs));
            ok = solve_min_cost(problem).cost == brute_force_solve(problem).cost;
            ++instances;
        }
    }
    report(3, "solver cost equals reference oracle on " + std::to_string(instances) +
                  " random instances",
           ok, seconds_since(start), 300.0);
}

// --- 4 and 6 share a corpus of random schemes ------------------------------

struct SchemeSample {
    int n = 0;
    TransmissionScheme scheme;
};

std::vector<SchemeSample> scheme_corpus(int count) {
    std::mt19937_64 gen(derive_seed(0xacce97, 4));
    std::vector<SchemeSample> corpus;
    corpus.reserve(count);
    for (int trial = 0; trial < count; ++trial) {
        int n = 3 + static_cast<int>(gen() % 6); // 3..8
        std::vector<int> y(static_cast<std::size_t>(n));
        for (int& v : y) v = static_cast<int>(gen() % 7); // entries 0..6
        corpus.push_back({n, TransmissionScheme(y)});
    }
    return corpus;
}

void criterion_feasibility_equivalence(const std::vector<SchemeSample>& corpus) {
    auto start = Clock::now();
    bool ok = true;
    for (const SchemeSample& s : corpus) {
        bool fast = is_feasible(s.n, s.scheme).feasible;
        bool slow = is_feasible_exhaustive(s.n, s.scheme).feasible;
        std::vector<bool> cert = structural_certificate(s.n, s.scheme);
        bool all = std::all_of(cert.begin(), cert.end(), [](bool b) { return b; });
        if (fast != slow || fast != all) {
            ok = false;
            break;
        }
    }
    report(4, "counting check == exhaustive subsets == per-client matching on " +
                  std::to_string(corpus.size()) + " schemes",
           ok, seconds_since(start), 60.0);
}

// --- 5: optimal counts never increase along ascending cost -----------------

void criterion_nonincreasing() {
    auto start = Clock::now();
    std::mt19937_64 gen(derive_seed(0xacce97, 5));
    bool ok = true;
    const int instances = 500;
    for (int trial = 0; trial < instances && ok; ++trial) {
        int n = 3 + static_cast<int>(gen() % 6);
        std::vector<Rational> costs;
        for (int i = 0; i < n; ++i) {
            costs.emplace_back(static_cast<std::int64_t>(gen() % 50) + 1);
        }
        ExchangeProblem problem(n, std::move(costs));
        OptimalScheme opt = solve_min_cost(problem);
        for (int r = 0; r + 1 < n && ok; ++r) {
            int a = opt.sort_permutation[r] - 1;
            int b = opt.sort_permutation[r + 1] - 1;
            ok = opt.scheme.y[a] >= opt.scheme.y[b];
        }
    }
    report(5, "optimal counts non-increasing in cost order on " + std::to_string(instances) +
                  " instances",
           ok, seconds_since(start), 60.0);
}

// --- 6: distinct-representative coefficients reach full rank ---------------

void criterion_transversal_rank(const std::vector<SchemeSample>& corpus) {
    auto start = Clock::now();
    Field gf2(1);
    Field gf256(8);
    bool ok = true;
    int schemes = 0;
    for (const SchemeSample& s : corpus) {
        if (!is_feasible(s.n, s.scheme).feasible) continue;
        ++schemes;
        SparsityPattern pattern = build_pattern(s.n, s.scheme);
        for (int i = 1; i <= s.n && ok; ++i) {
            ReceivingPattern view = receiving_pattern(pattern, ClientId(i));
            std::vector<int> match = transversal_assignment(view);
            for (const Field* f : {&gf2, &gf256}) {
                FieldMatrix m(*f, view.rows, view.cols);
                for (int r = 0; r < view.rows; ++r) m.at(r, match[r]) = 1;
                ok = ok && m.rank() == static_cast<int>(choose2(s.n - 1));
            }
        }
        if (!ok) break;
    }
    report(6, "transversal coefficients give full receiving rank over GF(2) and GF(256) on " +
                  std::to_string(schemes) + " feasible schemes",
           ok, seconds_since(start), 120.0);
}

// --- 7: encode -> decode round trip, bit exact ------------------------------

void criterion_round_trip() {
    auto start = Clock::now();
    Field field(8);
    std::mt19937_64 gen(derive_seed(0xacce97, 7));
    bool ok = true;
    const int instances = 100;
    for (int trial = 0; trial < instances && ok; ++trial) {
        int n = 3 + static_cast<int>(gen() % 6); // 3..8
        TransmissionScheme scheme;
        do {
            std::vector<int> y(static_cast<std::size_t>(n));
            for (int& v : y) v = static_cast<int>(gen() % (n - 1));
            scheme = TransmissionScheme(y);
        } while (!is_feasible(n, scheme).feasible);

        VerifiedCode code = construct_verified_code(n, scheme, field, gen(), 64);
        PacketUniverse universe = packet_universe(n);
        std::vector<FieldElement> natives;
        for (std::size_t r = 0; r < universe.packets.size(); ++r) {
            natives.push_back(static_cast<FieldElement>(gen() & 0xFF));
        }
        std::vector<FieldElement> transmitted = encode(code.matrix, natives);

        for (int i = 1; i <= n && ok; ++i) {
            ClientId client(i);
            ReceivingMatrix view = receiving_matrix(code.matrix, client);
            std::vector<FieldElement> received;
            for (int c : view.col_sources) received.push_back(transmitted[c]);
            std::map<PacketId, FieldElement> known;
            for (const PacketId& p : held_packets(n, client)) {
                known[p] = natives[universe.row_of(p)];
            }
            std::map<PacketId, FieldElement> out = decode(code.matrix, client, received, known);
            ok = out.size() == wanted_packets(n, client).size();
            for (const auto& [packet, value] : out) {
                ok = ok && value == natives[universe.row_of(packet)];
            }
        }
    }
    report(7, "encode/decode round trip exact on " + std::to_string(instances) +
                  " verified codes",
           ok, seconds_since(start), 60.0);
}

// --- 8: empirical decode rates clear the three-sigma gate ------------------

bool statistical_gate(int field_bits, int trials) {
    Field field(field_bits);
    OptimalScheme fewest = solve_min_transmissions(6);
    TrialReport r = run_trials(6, fewest.scheme, field, trials, derive_seed(0xacce97, 8));
    double bound = static_cast<double>(r.bound.numerator()) /
                   static_cast<double>(r.bound.denominator());
    double gate = bound - 3.0 * std::sqrt(bound * (1.0 - bound) / trials);
    for (double rate : r.per_client_rate) {
        if (rate < gate) return false;
    }
    return true;
}

void criterion_statistical() {
    auto start = Clock::now();
    bool ok = statistical_gate(8, 10000) && statistical_gate(4, 10000);
    report(8, "six-client decode rates clear the 3-sigma gate at q=256 and q=16", ok,
           seconds_since(start), 120.0);
}

// --- 9: every packet subset touches enough clients --------------------------

void criterion_covering_floor() {
    auto start = Clock::now();
    bool ok = true;
    for (int n = 3; n <= 7 && ok; ++n) {
        PacketUniverse universe = packet_universe(n);
        int k = static_cast<int>(universe.packets.size());
        std::vector<unsigned> endpoint_mask(k, 0);
        for (int r = 0; r < k; ++r) {
            endpoint_mask[r] = (1u << (universe.packets[r].a.index - 1)) |
                               (1u << (universe.packets[r].b.index - 1));
        }
        std::vector<int> floor_of(k + 1, 0);
        for (int r = 1; r <= k; ++r) floor_of[r] = min_clients_covering(r);

        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            unsigned clients = 0;
            int size = 0;
            for (unsigned rest = mask; rest; rest &= rest - 1) {
                clients |= endpoint_mask[__builtin_ctz(rest)];
                ++size;
            }
            if (__builtin_popcount(clients) < floor_of[size]) {
                ok = false;
                break;
            }
        }
    }
    report(9, "every packet subset touches at least the covering floor of clients up to n=7",
           ok, seconds_since(start), 60.0);
}

} // namespace

int main() {
    criterion_bound_table();
    criterion_cost_pair();
    criterion_solver_oracle();
    std::vector<SchemeSample> corpus = scheme_corpus(1000);
    criterion_feasibility_equivalence(corpus);
    criterion_nonincreasing();
    criterion_transversal_rank(corpus);
    criterion_round_trip();
    criterion_statistical();
    criterion_covering_floor();

    if (g_failures) {
        std::cerr << g_failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
