#include "tpx/simulate.hpp"

#include "tpx/coding.hpp"
#include "tpx/feasibility.hpp"
#include "tpx/rng.hpp"

namespace tpx {

Rational decode_probability_bound(int n, std::uint32_t q) {
    if (n < 3) throw InvalidProblemError("need at least three clients");
    if (q < 2) throw InvalidProblemError("field order must be at least 2");
    long long pairs = choose2(n - 1); // (n-1)(n-2)/2 wanted packets per client
    return Rational(1) - Rational(pairs, static_cast<long long>(q));
}

Rational all_clients_union_bound(int n, std::uint32_t q) {
    if (n < 3) throw InvalidProblemError("need at least three clients");
    if (q < 2) throw InvalidProblemError("field order must be at least 2");
    return Rational(1) - Rational(n) * Rational(choose2(n - 1), static_cast<long long>(q));
}

TrialReport run_trials(int n, const TransmissionScheme& scheme, const Field& field,
                       int trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidProblemError("need at least one trial");
    FeasibilityVerdict verdict = is_feasible(n, scheme);
    if (!verdict.feasible) {
        throw InvalidProblemError("scheme is infeasible: decode can never succeed for all");
    }

    TrialReport report;
    report.n = n;
    report.q = field.order();
    report.trials = trials;
    report.scheme = scheme;
    report.seed = seed;
    report.bound = decode_probability_bound(n, field.order());
    report.per_client_successes.assign(n, 0);

    for (int t = 0; t < trials; ++t) {
        // Per-trial seed from (master, index): evaluation order never matters.
        EncodingMatrix code = random_code(n, scheme, field, derive_seed(seed, t));
        bool all = true;
        for (int i = 1; i <= n; ++i) {
            if (can_decode(receiving_matrix(code, ClientId(i)))) {
                ++report.per_client_successes[i - 1];
            } else {
                all = false;
            }
        }
        if (all) ++report.all_clients_successes;
    }

    report.per_client_rate.resize(n);
    for (int i = 0; i < n; ++i) {
        report.per_client_rate[i] =
            static_cast<double>(report.per_client_successes[i]) / trials;
    }
    report.all_clients_rate = static_cast<double>(report.all_clients_successes) / trials;
    return report;
}

BoundTable bound_table() {
    BoundTable table;
    table.client_counts = {4, 6, 8, 10, 12};
    table.field_orders = {256, 512};
    for (int n : table.client_counts) {
        std::vector<Rational> exact_row;
        std::vector<std::string> rounded_row;
        for (std::uint32_t q : table.field_orders) {
            Rational bound = decode_probability_bound(n, q);
            exact_row.push_back(bound);
            rounded_row.push_back(format_fixed(bound, 4));
        }
        table.exact.push_back(std::move(exact_row));
        table.rounded.push_back(std::move(rounded_row));
    }
    return table;
}

} // namespace tpx
