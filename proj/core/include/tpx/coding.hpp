#ifndef TPX_CODING_HPP
#define TPX_CODING_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tpx/galois.hpp"
#include "tpx/model.hpp"

namespace tpx {

/// Zero/nonzero structure of the K x T encoding matrix. Columns are grouped
/// by sender: client i owns y_i consecutive columns, and a column may be
/// non-zero only in the N-1 rows of packets its owner holds.
struct SparsityPattern {
    int n = 0;
    int rows = 0;                  // K = n(n-1)/2
    int cols = 0;                  // T = sum of y
    std::vector<int> column_owner; // per column, 1-based client index
    std::vector<std::uint8_t> allowed; // row-major rows x cols

    bool is_allowed(int r, int c) const {
        return allowed[std::size_t(r) * cols + c] != 0;
    }
};

/// Sub-pattern seen by one client: rows are its wanted packets, columns the
/// other clients' transmissions. row_sources / col_sources give the indices
/// in the full pattern.
struct ReceivingPattern {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> allowed; // row-major
    std::vector<int> row_sources;
    std::vector<int> col_sources;

    bool is_allowed(int r, int c) const {
        return allowed[std::size_t(r) * cols + c] != 0;
    }
};

/// Columns of one pattern row that may carry non-zero coefficients.
struct CoefSet {
    int row = 0;
    std::vector<int> columns;

    bool operator==(const CoefSet&) const = default;
};

/// The K x T coefficient matrix: values[r][c] = 0 wherever the pattern
/// disallows the position. Column c is the coefficient vector of the
/// owner's c-th transmission.
struct EncodingMatrix {
    SparsityPattern pattern;
    FieldMatrix values;

    const Field& field() const { return values.field(); }
};

/// One client's view of an encoding matrix: wanted-packet rows by
/// other-client columns, shape (N-1)(N-2)/2 x (T - y_i).
struct ReceivingMatrix {
    ClientId client;
    FieldMatrix values;
    std::vector<PacketId> row_packets; // wanted packets, universe order
    std::vector<int> col_sources;      // originating column index in E
};

/// Result of the randomized-and-verified construction.
struct VerifiedCode {
    EncodingMatrix matrix;
    int attempts = 0;
};

SparsityPattern build_pattern(int n, const TransmissionScheme& scheme);

ReceivingPattern receiving_pattern(const SparsityPattern& pattern, ClientId i);

/// Per-row allowed columns, in row order.
std::vector<CoefSet> coef_sets(const ReceivingPattern& pattern);

ReceivingMatrix receiving_matrix(const EncodingMatrix& e, ClientId i);

/// True iff the receiving matrix has full row rank (N-1)(N-2)/2, i.e. the
/// client can recover every wanted packet.
bool can_decode(const ReceivingMatrix& r);

/// A system of distinct representatives for the pattern rows: one allowed
/// column per row, all distinct, found by maximum bipartite matching.
/// Setting the matched entries to 1 and every other coefficient position to
/// 0 yields a full-row-rank matrix over any field. Throws HallViolationError
/// carrying a deficient row set when no transversal exists.
std::vector<int> transversal_assignment(const ReceivingPattern& pattern);

/// Every allowed position drawn independently and uniformly from the whole
/// field (zero included). Deterministic given the seed.
EncodingMatrix random_code(int n, const TransmissionScheme& scheme,
                           const Field& field, std::uint64_t seed);

/// Draws random codes with per-attempt seeds derived from (seed, attempt)
/// until one is decodable by every client, up to max_retries attempts.
/// Rejects infeasible schemes up front (InvalidProblemError); throws
/// ConstructionError when the retry budget is exhausted.
VerifiedCode construct_verified_code(int n, const TransmissionScheme& scheme,
                                     const Field& field, std::uint64_t seed,
                                     int max_retries);

/// transmitted[c] = sum over rows r of E[r][c] * natives[r].
std::vector<FieldElement> encode(const EncodingMatrix& e,
                                 std::span<const FieldElement> natives);

/// Recovers client i's wanted packet values from the other clients'
/// transmissions. `received` holds the T - y_i symbols in the column order
/// of receiving_matrix(e, i); `known` holds the values of the packets the
/// client already has. Subtracts the known contributions from each received
/// symbol, then solves the resulting linear system. Throws
/// NoUniqueSolutionError when the receiving matrix is rank-deficient.
std::map<PacketId, FieldElement> decode(const EncodingMatrix& e, ClientId i,
                                        std::span<const FieldElement> received,
                                        const std::map<PacketId, FieldElement>& known);

/// {"n":..., "y":[...], "field_m":..., "columns":[{"owner":..., "entries":
/// {"row":value,...}},...]} with entries sparse by 0-based row index.
std::string encoding_matrix_to_json(const EncodingMatrix& e);

} // namespace tpx

#endif // TPX_CODING_HPP
