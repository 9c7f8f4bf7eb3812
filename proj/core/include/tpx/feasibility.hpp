#ifndef TPX_FEASIBILITY_HPP
#define TPX_FEASIBILITY_HPP

#include <vector>

#include "tpx/model.hpp"

namespace tpx {

/// Outcome of a feasibility check. When infeasible, violating_subset holds
/// the k clients whose joint transmit count falls short: actual < required
/// where required = choose2(k).
struct FeasibilityVerdict {
    bool feasible = false;
    std::vector<ClientId> violating_subset; // empty iff feasible
    long long required = 0;
    long long actual = 0;

    bool operator==(const FeasibilityVerdict&) const = default;
};

/// Fast feasibility check: for every k in [1, n-1] the k smallest entries of
/// y must sum to at least choose2(k). The minimum over all k-subsets is
/// attained at the k smallest entries, so this sorted check covers every
/// subset. On failure reports the smallest violated k and the k smallest-y
/// clients (ties by lowest index).
FeasibilityVerdict is_feasible(int n, const TransmissionScheme& scheme);

/// Same verdict, computed by enumerating every non-empty subset of fewer
/// than n clients. Serves as the independent oracle for is_feasible.
/// Throws ResourceLimitError for n > 20.
FeasibilityVerdict is_feasible_exhaustive(int n, const TransmissionScheme& scheme);

/// Per-client decodability of the sparsity pattern alone: client i passes
/// iff the zero/nonzero pattern of its receiving matrix admits full row
/// rank, decided by maximum bipartite matching between wanted-packet rows
/// and received columns. The scheme is feasible iff all clients pass.
std::vector<bool> structural_certificate(int n, const TransmissionScheme& scheme);

} // namespace tpx

#endif // TPX_FEASIBILITY_HPP
