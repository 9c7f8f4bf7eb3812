#include "tpx/feasibility.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tpx/matching.hpp"

namespace tpx {

namespace {

void check_inputs(int n, const TransmissionScheme& scheme) {
    if (n < 3) throw InvalidProblemError("need at least three clients");
    if (scheme.clients() != n) {
        throw InvalidProblemError("scheme length must equal the client count");
    }
}

} // namespace

FeasibilityVerdict is_feasible(int n, const TransmissionScheme& scheme) {
    check_inputs(n, scheme);

    // Clients ordered by (count, index): the k-prefix is the unique minimum
    // k-subset under that tie-break.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return scheme.y[a] != scheme.y[b] ? scheme.y[a] < scheme.y[b] : a < b;
    });

    long long prefix = 0;
    for (int k = 1; k < n; ++k) {
        prefix += scheme.y[order[k - 1]];
        if (prefix < choose2(k)) {
            std::vector<int> subset(order.begin(), order.begin() + k);
            std::sort(subset.begin(), subset.end());
            FeasibilityVerdict verdict;
            verdict.feasible = false;
            for (int idx : subset) verdict.violating_subset.emplace_back(idx + 1);
            verdict.required = choose2(k);
            verdict.actual = prefix;
            return verdict;
        }
    }
    FeasibilityVerdict verdict;
    verdict.feasible = true;
    return verdict;
}

FeasibilityVerdict is_feasible_exhaustive(int n, const TransmissionScheme& scheme) {
    check_inputs(n, scheme);
    if (n > 20) throw ResourceLimitError("exhaustive subset check limited to 20 clients");

    // Scan every non-empty proper subset; report the violation with the
    // smallest k, then the smallest joint count, then the lexicographically
    // smallest member list -- the same subset is_feasible reports.
    bool violated = false;
    int best_k = 0;
    long long best_sum = 0;
    std::vector<int> best_members;

    const unsigned full = (1u << n) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
        int k = std::popcount(mask);
        long long sum = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) sum += scheme.y[i];
        }
        if (sum >= choose2(k)) continue;

        std::vector<int> members;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) members.push_back(i);
        }
        bool better = !violated;
        if (violated) {
            if (k != best_k) {
                better = k < best_k;
            } else if (sum != best_sum) {
                better = sum < best_sum;
            } else {
                better = members < best_members;
            }
        }
        if (better) {
            violated = true;
            best_k = k;
            best_sum = sum;
            best_members = std::move(members);
        }
    }

    FeasibilityVerdict verdict;
    verdict.feasible = !violated;
    if (violated) {
        for (int idx : best_members) verdict.violating_subset.emplace_back(idx + 1);
        verdict.required = choose2(best_k);
        verdict.actual = best_sum;
    }
    return verdict;
}

std::vector<bool> structural_certificate(int n, const TransmissionScheme& scheme) {
    check_inputs(n, scheme);

    std::vector<bool> pass(n, false);
    for (int i = 1; i <= n; ++i) {
        ClientId client(i);
        std::vector<PacketId> wanted = wanted_packets(n, client);
        int rows = static_cast<int>(wanted.size());

        // One column per transmission of every other client; a row connects
        // to a column iff the column's sender holds that packet.
        std::vector<int> col_offset(n + 1, 0);
        int cols = 0;
        for (int j = 1; j <= n; ++j) {
            col_offset[j] = cols;
            if (j != i) cols += scheme.y[j - 1];
        }

        BipartiteMatching matching(rows, cols);
        for (int r = 0; r < rows; ++r) {
            for (ClientId endpoint : {wanted[r].a, wanted[r].b}) {
                int j = endpoint.index;
                for (int t = 0; t < scheme.y[j - 1]; ++t) {
                    matching.add_edge(r, col_offset[j] + t);
                }
            }
        }
        pass[i - 1] = matching.solve() == rows;
    }
    return pass;
}

} // namespace tpx
