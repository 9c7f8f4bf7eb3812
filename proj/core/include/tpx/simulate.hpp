#ifndef TPX_SIMULATE_HPP
#define TPX_SIMULATE_HPP

#include <cstdint>
#include <vector>

#include "tpx/galois.hpp"
#include "tpx/model.hpp"
#include "tpx/rational.hpp"

namespace tpx {

/// Empirical decode statistics for one (scheme, field, trials) run, against
/// the per-client lower bound.
struct TrialReport {
    int n = 0;
    std::uint32_t q = 0;
    int trials = 0;
    TransmissionScheme scheme;
    std::vector<long long> per_client_successes; // decodable trials per client
    std::vector<double> per_client_rate;
    long long all_clients_successes = 0;         // trials where every client decodes
    double all_clients_rate = 0.0;
    Rational bound;                              // per-client lower bound
    std::uint64_t seed = 0;
};

/// The 5 x 2 grid of per-client bounds for N in {4,...,12} and q in
/// {256, 512}, exact and rounded to four decimals (half away from zero).
struct BoundTable {
    std::vector<int> client_counts;
    std::vector<std::uint32_t> field_orders;
    std::vector<std::vector<Rational>> exact;        // [n-index][q-index]
    std::vector<std::vector<std::string>> rounded;
};

/// Per-client probability that random linear coding over GF(q) is decodable:
/// at least 1 - (n-1)(n-2)/(2q), by a Schwartz-Zippel argument on the
/// receiving-matrix determinant. Exact rational; negative for tiny q is
/// returned as-is.
Rational decode_probability_bound(int n, std::uint32_t q);

/// Union-bound style reference for ALL clients decoding simultaneously:
/// 1 - n(n-1)(n-2)/(2q). A heuristic companion line, not a proven per-client
/// bound.
Rational all_clients_union_bound(int n, std::uint32_t q);

/// Draws `trials` random codes, recording per client whether its receiving
/// matrix reaches full row rank. Trial t uses a seed derived from
/// (seed, t), so results are bit-identical regardless of evaluation order.
/// Rejects infeasible schemes with InvalidProblemError.
TrialReport run_trials(int n, const TransmissionScheme& scheme, const Field& field,
                       int trials, std::uint64_t seed);

/// Bounds for n in {4,6,8,10,12} x q in {256,512} at 4-decimal rounding.
BoundTable bound_table();

} // namespace tpx

#endif // TPX_SIMULATE_HPP
