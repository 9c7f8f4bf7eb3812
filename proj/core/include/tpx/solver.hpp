#ifndef TPX_SOLVER_HPP
#define TPX_SOLVER_HPP

#include <optional>
#include <span>
#include <vector>

#include "tpx/model.hpp"
#include "tpx/rational.hpp"

namespace tpx {

/// An optimal transmission assignment together with its exact cost.
/// sort_permutation maps rank in cost-ascending order to the original
/// client index: sort_permutation[r] is the client holding rank r.
struct OptimalScheme {
    TransmissionScheme scheme;       // per-client counts, original order
    Rational cost;                   // exact total cost
    int total_transmissions = 0;     // sum of scheme.y
    std::vector<int> sort_permutation;

    bool operator==(const OptimalScheme&) const = default;
};

/// Exact minimum-cost solver. Clients are ranked by ascending cost (ties by
/// original index); the search walks assignments that are non-increasing in
/// that order, which always contains an optimal point, pruning with an
/// admissible completion bound. Ties break by (cost, total transmissions,
/// lexicographic order of the ranked vector).
OptimalScheme solve_min_cost(const ExchangeProblem& problem);

/// Minimum total transmissions irrespective of cost: unit costs, same
/// tie-break. Equivalent to solve_min_cost with all costs equal to one.
OptimalScheme solve_min_transmissions(int n);

/// Reference solver: enumerates candidate vectors over [0, y_cap]^n,
/// filtering with the exhaustive subset check. Exponentially slower but
/// shares no code path with solve_min_cost; used to validate it.
/// y_cap defaults to choose2(n-1), the proven per-client ceiling.
OptimalScheme brute_force_solve(const ExchangeProblem& problem, int y_cap = -1);

/// Admissible lower bound on the total cost of any feasible completion of
/// a partial assignment. `prefix` fixes the counts of the first
/// prefix.size() clients in cost-ascending rank order; remaining clients
/// are free. Returns nullopt when no feasible completion exists under the
/// non-increasing search space. With an empty prefix this bounds the
/// optimum from below; with a full feasible assignment it returns its
/// exact cost.
std::optional<Rational> completion_lower_bound(const ExchangeProblem& problem,
                                               std::span<const int> prefix);

} // namespace tpx

#endif // TPX_SOLVER_HPP
