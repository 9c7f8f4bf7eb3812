#include "tpx/solver.hpp"

#include <algorithm>
#include <numeric>

#include "tpx/feasibility.hpp"

namespace tpx {

namespace {

// Clients ranked by ascending cost, ties by original index. The optimum is
// always attained by a vector non-increasing in this order: swapping two
// entries that violate it never raises the cost and preserves every
// sorted-subset constraint.
std::vector<int> rank_clients(const ExchangeProblem& problem) {
    std::vector<int> order(problem.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return problem.costs[a] < problem.costs[b];
    });
    return order;
}

// The k smallest entries of a non-increasing vector are its last k, so the
// feasibility condition becomes: suffix_sum(k) >= choose2(k) for k < n.
//
// For a prefix value[0..p) the minimum total the remaining positions must
// still provide is the largest outstanding deficit over all k.
long long remaining_deficit(int n, int p, const std::vector<long long>& prefix_sum) {
    long long deficit = 0;
    for (int k = 1; k < n; ++k) {
        // Prefix positions inside the last-k window are n-k..p-1.
        long long fixed = n - k >= p ? 0 : prefix_sum[p] - prefix_sum[n - k];
        deficit = std::max(deficit, choose2(k) - fixed);
    }
    return deficit;
}

// Whether some non-increasing completion with values <= bound satisfies all
// suffix constraints. Setting every remaining position to `bound` maximises
// each suffix sum simultaneously, so checking that single completion decides.
bool completion_possible(int n, int p, long long bound,
                         const std::vector<long long>& prefix_sum) {
    int inside = std::min(n - p, n - 1); // largest k fully inside the remainder
    if (inside > 2 * bound + 1) return false; // k*bound < choose2(k)
    return remaining_deficit(n, p, prefix_sum) <= static_cast<long long>(n - p) * bound;
}

struct Search {
    int n;
    long long cap;
    std::vector<Rational> delta; // ascending
    std::vector<int> value;
    std::vector<long long> prefix_sum;

    Rational best_cost;
    long long best_total = 0;
    std::vector<int> best_vec;

    void offer(const Rational& cost, long long total) {
        bool better = cost < best_cost ||
                      (cost == best_cost && total < best_total) ||
                      (cost == best_cost && total == best_total && value < best_vec);
        if (better) {
            best_cost = cost;
            best_total = total;
            best_vec = value;
        }
    }

    void dfs(int p, int bound, const Rational& cost, long long total) {
        if (p == n) {
            offer(cost, total);
            return;
        }
        for (int v = bound; v >= 0; --v) {
            value[p] = v;
            prefix_sum[p + 1] = prefix_sum[p] + v;
            if (!completion_possible(n, p + 1, v, prefix_sum)) continue;

            long long deficit = remaining_deficit(n, p + 1, prefix_sum);
            Rational cost_here = cost + delta[p] * Rational(v);
            Rational cost_floor = cost_here;
            if (p + 1 < n) cost_floor += delta[p + 1] * Rational(deficit);
            long long total_floor = total + v + deficit;

            if (cost_floor > best_cost) continue;
            if (cost_floor == best_cost) {
                if (total_floor > best_total) continue;
                if (total_floor == best_total &&
                    std::lexicographical_compare(best_vec.begin(), best_vec.begin() + p + 1,
                                                 value.begin(), value.begin() + p + 1)) {
                    continue; // every completion is lexicographically larger
                }
            }
            dfs(p + 1, v, cost_here, total + v);
        }
    }
};

OptimalScheme assemble(const ExchangeProblem& problem, const std::vector<int>& order,
                       const std::vector<int>& ranked_y, const Rational& cost) {
    std::vector<int> y(problem.n, 0);
    for (int r = 0; r < problem.n; ++r) y[order[r]] = ranked_y[r];
    TransmissionScheme scheme(std::move(y));
    int total = scheme.total();
    std::vector<int> perm(problem.n);
    for (int r = 0; r < problem.n; ++r) perm[r] = order[r] + 1; // 1-based clients
    return OptimalScheme{std::move(scheme), cost, total, std::move(perm)};
}

// Feasible and cost-tight for ascending costs: the tail (k-1, ..., 1, 0)
// meets every suffix constraint with equality.
std::vector<int> seed_vector(int n) {
    std::vector<int> v(n);
    v[0] = n - 2;
    for (int r = 1; r < n; ++r) v[r] = n - 1 - r;
    return v;
}

} // namespace

OptimalScheme solve_min_cost(const ExchangeProblem& problem) {
    const int n = problem.n;
    std::vector<int> order = rank_clients(problem);

    Search s;
    s.n = n;
    s.cap = choose2(n - 1);
    s.delta.reserve(n);
    for (int r : order) s.delta.push_back(problem.costs[r]);
    s.value.assign(n, 0);
    s.prefix_sum.assign(n + 1, 0);

    s.best_vec = seed_vector(n);
    s.best_total = std::accumulate(s.best_vec.begin(), s.best_vec.end(), 0LL);
    s.best_cost = Rational(0);
    for (int r = 0; r < n; ++r) s.best_cost += s.delta[r] * Rational(s.best_vec[r]);

    s.dfs(0, static_cast<int>(s.cap), Rational(0), 0);
    return assemble(problem, order, s.best_vec, s.best_cost);
}

OptimalScheme solve_min_transmissions(int n) {
    if (n < 3) throw InvalidProblemError("need at least three clients");
    return solve_min_cost(ExchangeProblem(n, std::vector<Rational>(n, Rational(1))));
}

OptimalScheme brute_force_solve(const ExchangeProblem& problem, int y_cap) {
    const int n = problem.n;
    if (n > 7) throw ResourceLimitError("reference solver limited to 7 clients");
    const long long cap_limit = choose2(n - 1);
    if (y_cap < 0) y_cap = static_cast<int>(cap_limit);
    if (y_cap > cap_limit) {
        throw InvalidProblemError("cap above choose2(n-1) only enlarges the search in vain");
    }

    std::vector<int> order = rank_clients(problem);
    std::vector<Rational> delta;
    delta.reserve(n);
    for (int r : order) delta.push_back(problem.costs[r]);

    // Enumerate value multisets as non-increasing vectors. Feasibility
    // depends only on the multiset, and for ascending costs the cheapest
    // assignment of a multiset is its non-increasing arrangement
    // (rearrangement inequality), which is also the tie-break witness.
    bool found = false;
    Rational best_cost(0);
    long long best_total = 0;
    std::vector<int> best_vec;
    std::vector<int> value(n, 0);

    auto consider = [&]() {
        FeasibilityVerdict verdict = is_feasible_exhaustive(n, TransmissionScheme(value));
        if (!verdict.feasible) return;
        Rational cost(0);
        long long total = 0;
        for (int r = 0; r < n; ++r) {
            cost += delta[r] * Rational(value[r]);
            total += value[r];
        }
        bool better = !found || cost < best_cost ||
                      (cost == best_cost && total < best_total) ||
                      (cost == best_cost && total == best_total && value < best_vec);
        if (better) {
            found = true;
            best_cost = cost;
            best_total = total;
            best_vec = value;
        }
    };

    auto enumerate = [&](auto&& self, int p, int bound) -> void {
        if (p == n) {
            consider();
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            value[p] = v;
            self(self, p + 1, v);
        }
    };
    enumerate(enumerate, 0, y_cap);

    if (!found) throw ResourceLimitError("no feasible scheme within the cap");
    return assemble(problem, order, best_vec, best_cost);
}

std::optional<Rational> completion_lower_bound(const ExchangeProblem& problem,
                                               std::span<const int> prefix) {
    const int n = problem.n;
    const int p = static_cast<int>(prefix.size());
    const long long cap = choose2(n - 1);
    if (p > n) throw InvalidProblemError("prefix longer than the client count");
    for (int r = 0; r < p; ++r) {
        if (prefix[r] < 0 || prefix[r] > cap) {
            throw InvalidProblemError("prefix value outside [0, choose2(n-1)]");
        }
        if (r > 0 && prefix[r] > prefix[r - 1]) {
            throw InvalidProblemError("prefix must be non-increasing");
        }
    }

    std::vector<int> order = rank_clients(problem);
    std::vector<Rational> delta;
    delta.reserve(n);
    for (int r : order) delta.push_back(problem.costs[r]);

    std::vector<long long> prefix_sum(n + 1, 0);
    for (int r = 0; r < p; ++r) prefix_sum[r + 1] = prefix_sum[r] + prefix[r];

    long long bound = p == 0 ? cap : prefix[p - 1];
    if (!completion_possible(n, p, bound, prefix_sum)) return std::nullopt;

    Rational cost(0);
    for (int r = 0; r < p; ++r) cost += delta[r] * Rational(prefix[r]);
    if (p < n) cost += delta[p] * Rational(remaining_deficit(n, p, prefix_sum));
    return cost;
}

} // namespace tpx
