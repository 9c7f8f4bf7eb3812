#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tpx/coding.hpp"
#include "tpx/feasibility.hpp"
#include "tpx/model.hpp"
#include "tpx/rng.hpp"
#include "tpx/simulate.hpp"
#include "tpx/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitRuntime = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tpx::InvalidProblemError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<int> parse_scheme(const std::string& text) {
    std::vector<int> counts;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw tpx::InvalidProblemError("bad scheme entry \"" + token + "\"");
        }
        if (used != token.size() || value < 0) {
            throw tpx::InvalidProblemError("bad scheme entry \"" + token + "\"");
        }
        counts.push_back(value);
    }
    if (counts.empty()) throw tpx::InvalidProblemError("empty scheme");
    return counts;
}

// Honors an explicit --seed; otherwise draws one and tells the user how to
// reproduce the run.
std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed) {
    if (seed_given) return seed;
    std::random_device entropy;
    std::uint64_t drawn = (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
    std::cerr << "seed: " << drawn << " (pass --seed to reproduce)\n";
    return drawn;
}

std::string join_counts(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(values[i]);
    }
    return out;
}

void print_scheme_json(const tpx::OptimalScheme& result, const tpx::Rational& cost) {
    std::cout << "{\"y\":[";
    for (int i = 0; i < result.scheme.clients(); ++i) {
        if (i) std::cout << ',';
        std::cout << result.scheme.y[i];
    }
    std::cout << "],\"cost\":\"" << tpx::to_decimal_string(cost) << "\""
              << ",\"cost_numerator\":" << cost.numerator()
              << ",\"cost_denominator\":" << cost.denominator()
              << ",\"transmissions\":" << result.total_transmissions << ",\"order\":[";
    for (std::size_t i = 0; i < result.sort_permutation.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << result.sort_permutation[i];
    }
    std::cout << "]}\n";
}

int cmd_solve(const std::string& input_path, bool unit_cost, const std::string& format) {
    tpx::ExchangeProblem problem = tpx::parse_problem_json(read_file(input_path));
    tpx::OptimalScheme result =
        unit_cost ? tpx::solve_min_transmissions(problem.n) : tpx::solve_min_cost(problem);
    // Under --unit-cost the scheme minimises transmissions; report what it
    // costs under the problem's actual prices.
    tpx::Rational cost = tpx::total_cost(problem, result.scheme);

    if (format == "json") {
        print_scheme_json(result, cost);
    } else {
        std::cout << "cost: " << tpx::to_decimal_string(cost) << "\n"
                  << "transmissions: " << result.total_transmissions << "\n"
                  << "y: " << join_counts(result.scheme.y) << "\n"
                  << "order: " << join_counts(result.sort_permutation) << "\n";
    }
    return kExitOk;
}

int cmd_feasible(const std::string& scheme_text, const std::string& format) {
    std::vector<int> counts = parse_scheme(scheme_text);
    int n = static_cast<int>(counts.size());
    tpx::TransmissionScheme scheme(counts);
    tpx::FeasibilityVerdict verdict = tpx::is_feasible(n, scheme);

    if (format == "json") {
        std::cout << "{\"feasible\":" << (verdict.feasible ? "true" : "false");
        if (!verdict.feasible) {
            std::cout << ",\"violating_subset\":[";
            for (std::size_t i = 0; i < verdict.violating_subset.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << verdict.violating_subset[i].index;
            }
            std::cout << "],\"required\":" << verdict.required
                      << ",\"actual\":" << verdict.actual;
        }
        std::cout << "}\n";
    } else {
        std::cout << "feasible: " << (verdict.feasible ? "yes" : "no") << "\n";
        if (!verdict.feasible) {
            std::string members;
            for (const tpx::ClientId& c : verdict.violating_subset) {
                if (!members.empty()) members += ", ";
                members += std::to_string(c.index);
            }
            std::cout << "violating subset: " << members << "\n"
                      << "required: " << verdict.required << "\n"
                      << "actual: " << verdict.actual << "\n";
        }
    }
    return kExitOk;
}

int cmd_codegen(const std::string& scheme_text, int field_bits, bool seed_given,
                std::uint64_t seed, int max_retries) {
    std::vector<int> counts = parse_scheme(scheme_text);
    int n = static_cast<int>(counts.size());
    tpx::TransmissionScheme scheme(counts);
    tpx::Field field(field_bits);
    std::uint64_t master = resolve_seed(seed_given, seed);

    tpx::VerifiedCode code =
        tpx::construct_verified_code(n, scheme, field, master, max_retries);
    std::cerr << "attempts: " << code.attempts << "\n";
    std::cout << tpx::encoding_matrix_to_json(code.matrix) << "\n";
    return kExitOk;
}

int cmd_simulate(int clients, const std::string& scheme_text, int field_bits, int trials,
                 bool seed_given, std::uint64_t seed) {
    std::vector<int> counts;
    if (!scheme_text.empty()) {
        counts = parse_scheme(scheme_text);
        if (clients != 0 && clients != static_cast<int>(counts.size())) {
            throw tpx::InvalidProblemError("--clients disagrees with the scheme length");
        }
    } else {
        if (clients == 0) throw tpx::InvalidProblemError("need --clients or --scheme");
        counts = tpx::solve_min_transmissions(clients).scheme.y;
    }
    int n = static_cast<int>(counts.size());
    tpx::TransmissionScheme scheme(counts);
    tpx::Field field(field_bits);
    std::uint64_t master = resolve_seed(seed_given, seed);

    tpx::TrialReport report = tpx::run_trials(n, scheme, field, trials, master);

    std::cout << "client,successes,trials,rate,bound\n";
    for (int i = 0; i < n; ++i) {
        std::cout << (i + 1) << ',' << report.per_client_successes[i] << ',' << report.trials
                  << ',' << tpx::format_fixed(tpx::Rational(report.per_client_successes[i],
                                                            report.trials), 6)
                  << ',' << tpx::to_decimal_string(report.bound) << "\n";
    }
    std::cout << "all," << report.all_clients_successes << ',' << report.trials << ','
              << tpx::format_fixed(tpx::Rational(report.all_clients_successes, report.trials), 6)
              << ',' << tpx::to_decimal_string(tpx::all_clients_union_bound(n, field.order()))
              << "\n";
    std::cerr << "the all-row bound is a union-bound heuristic, not a per-client guarantee\n";
    return kExitOk;
}

int cmd_bound_table() {
    tpx::BoundTable table = tpx::bound_table();
    std::cout << "N";
    for (std::uint32_t q : table.field_orders) std::cout << "\tq=" << q;
    std::cout << "\n";
    for (std::size_t r = 0; r < table.client_counts.size(); ++r) {
        std::cout << table.client_counts[r];
        for (const std::string& cell : table.rounded[r]) std::cout << '\t' << cell;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_demo(bool seed_given, std::uint64_t seed) {
    std::uint64_t master = resolve_seed(seed_given, seed);
    const int n = 4;
    std::vector<tpx::Rational> costs{tpx::Rational(1), tpx::Rational(2), tpx::Rational(3),
                                     tpx::Rational(4)};
    tpx::ExchangeProblem problem(n, costs);

    std::cout << "four clients with per-packet costs 1, 2, 3, 4\n";
    tpx::OptimalScheme best = tpx::solve_min_cost(problem);
    std::cout << "cost-optimal scheme: y = (" << join_counts(best.scheme.y) << "), cost "
              << tpx::to_decimal_string(best.cost) << ", " << best.total_transmissions
              << " transmissions\n";

    tpx::OptimalScheme fewest = tpx::solve_min_transmissions(n);
    tpx::Rational fewest_cost = tpx::total_cost(problem, fewest.scheme);
    std::cout << "minimum-transmission scheme: y = (" << join_counts(fewest.scheme.y) << "), "
              << fewest.total_transmissions << " transmissions, cost "
              << tpx::to_decimal_string(fewest_cost) << " under the same prices\n";
    std::cout << "shifting transmissions onto cheap clients wins: cost "
              << tpx::to_decimal_string(best.cost) << " vs "
              << tpx::to_decimal_string(fewest_cost) << "\n";

    tpx::Field field(8);
    tpx::VerifiedCode code = tpx::construct_verified_code(n, best.scheme, field, master, 64);
    std::cout << "verified encoding matrix over GF(" << field.order() << ") found after "
              << code.attempts << " attempt(s)\n";

    // Random payloads, one field element per link packet.
    tpx::PacketUniverse universe = tpx::packet_universe(n);
    std::mt19937_64 engine(tpx::derive_seed(master, 0xda7a));
    std::vector<tpx::FieldElement> natives;
    for (std::size_t r = 0; r < universe.packets.size(); ++r) {
        natives.push_back(static_cast<tpx::FieldElement>(engine() & (field.order() - 1)));
    }
    std::vector<tpx::FieldElement> transmitted = tpx::encode(code.matrix, natives);
    std::cout << "encoded " << transmitted.size() << " transmissions for "
              << universe.packets.size() << " native packets\n";

    for (int i = 1; i <= n; ++i) {
        tpx::ClientId client(i);
        std::map<tpx::PacketId, tpx::FieldElement> known;
        for (const tpx::PacketId& p : tpx::held_packets(n, client)) {
            known.emplace(p, natives[universe.row_of(p)]);
        }
        std::vector<tpx::FieldElement> received;
        tpx::ReceivingMatrix view = tpx::receiving_matrix(code.matrix, client);
        for (int c : view.col_sources) received.push_back(transmitted[c]);

        std::map<tpx::PacketId, tpx::FieldElement> recovered =
            tpx::decode(code.matrix, client, received, known);
        for (const auto& [packet, value] : recovered) {
            if (value != natives[universe.row_of(packet)]) {
                std::cerr << "decode mismatch at client " << i << "\n";
                return kExitRuntime;
            }
        }
        std::cout << "client " << i << " decoded " << recovered.size()
                  << " wanted packets and now holds all " << universe.packets.size() << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-cost third-party information exchange with network coding"};
    app.require_subcommand(1);

    std::string input_path;
    std::string scheme_text;
    std::string format = "table";
    bool unit_cost = false;
    int field_bits = 8;
    int trials = 10000;
    int clients = 0;
    int max_retries = 64;
    std::uint64_t seed = 0;

    CLI::App* solve = app.add_subcommand("solve", "cost-optimal transmission scheme");
    solve->add_option("input", input_path, "problem JSON file")->required();
    solve->add_flag("--unit-cost", unit_cost, "minimise transmissions instead of cost");
    solve->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    CLI::App* feasible = app.add_subcommand("feasible", "check a transmission scheme");
    feasible->add_option("--scheme", scheme_text, "per-client counts, e.g. 2,2,1,0")
        ->required();
    feasible->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    CLI::App* codegen = app.add_subcommand("codegen", "verified encoding matrix as JSON");
    codegen->add_option("--scheme", scheme_text, "per-client counts")->required();
    codegen->add_option("--field-bits", field_bits, "field degree m for GF(2^m)")
        ->check(CLI::Range(1, 16));
    CLI::Option* codegen_seed = codegen->add_option("--seed", seed, "master seed");
    codegen->add_option("--max-retries", max_retries, "construction attempts")
        ->check(CLI::PositiveNumber);

    CLI::App* simulate = app.add_subcommand("simulate", "empirical decode rates as CSV");
    simulate->add_option("--clients", clients, "client count")->check(CLI::PositiveNumber);
    simulate->add_option("--scheme", scheme_text,
                         "per-client counts (default: minimum transmissions)");
    simulate->add_option("--field-bits", field_bits, "field degree m for GF(2^m)")
        ->check(CLI::Range(1, 16));
    simulate->add_option("--trials", trials, "number of random codes")
        ->check(CLI::PositiveNumber);
    CLI::Option* simulate_seed = simulate->add_option("--seed", seed, "master seed");

    CLI::App* bounds = app.add_subcommand("bound-table", "decode-probability lower bounds");

    CLI::App* demo = app.add_subcommand("demo", "four-client end-to-end walkthrough");
    CLI::Option* demo_seed = demo->add_option("--seed", seed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (solve->parsed()) return cmd_solve(input_path, unit_cost, format);
        if (feasible->parsed()) return cmd_feasible(scheme_text, format);
        if (codegen->parsed()) {
            return cmd_codegen(scheme_text, field_bits, !codegen_seed->empty(), seed,
                               max_retries);
        }
        if (simulate->parsed()) {
            return cmd_simulate(clients, scheme_text, field_bits, trials,
                                !simulate_seed->empty(), seed);
        }
        if (bounds->parsed()) return cmd_bound_table();
        if (demo->parsed()) return cmd_demo(!demo_seed->empty(), seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
