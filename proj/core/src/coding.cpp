#include "tpx/coding.hpp"

#include <random>
#include <string>

#include "tpx/feasibility.hpp"
#include "tpx/matching.hpp"
#include "tpx/rng.hpp"

namespace tpx {

SparsityPattern build_pattern(int n, const TransmissionScheme& scheme) {
    if (n < 3) throw InvalidProblemError("need at least three clients");
    if (scheme.clients() != n) {
        throw InvalidProblemError("scheme length must equal the client count");
    }

    PacketUniverse universe = packet_universe(n);
    SparsityPattern pattern;
    pattern.n = n;
    pattern.rows = static_cast<int>(universe.packets.size());
    pattern.cols = scheme.total();
    pattern.column_owner.reserve(pattern.cols);
    for (int i = 1; i <= n; ++i) {
        for (int t = 0; t < scheme.y[i - 1]; ++t) pattern.column_owner.push_back(i);
    }
    pattern.allowed.assign(static_cast<std::size_t>(pattern.rows) * pattern.cols, 0);
    for (int r = 0; r < pattern.rows; ++r) {
        for (int c = 0; c < pattern.cols; ++c) {
            if (universe.packets[r].involves(ClientId(pattern.column_owner[c]))) {
                pattern.allowed[static_cast<std::size_t>(r) * pattern.cols + c] = 1;
            }
        }
    }
    return pattern;
}

ReceivingPattern receiving_pattern(const SparsityPattern& pattern, ClientId i) {
    if (i.index > pattern.n) throw InvalidClientError("client index exceeds client count");

    PacketUniverse universe = packet_universe(pattern.n);
    ReceivingPattern view;
    for (int r = 0; r < pattern.rows; ++r) {
        if (!universe.packets[r].involves(i)) view.row_sources.push_back(r);
    }
    for (int c = 0; c < pattern.cols; ++c) {
        if (pattern.column_owner[c] != i.index) view.col_sources.push_back(c);
    }
    view.rows = static_cast<int>(view.row_sources.size());
    view.cols = static_cast<int>(view.col_sources.size());
    view.allowed.assign(static_cast<std::size_t>(view.rows) * view.cols, 0);
    for (int r = 0; r < view.rows; ++r) {
        for (int c = 0; c < view.cols; ++c) {
            if (pattern.is_allowed(view.row_sources[r], view.col_sources[c])) {
                view.allowed[static_cast<std::size_t>(r) * view.cols + c] = 1;
            }
        }
    }
    return view;
}

std::vector<CoefSet> coef_sets(const ReceivingPattern& pattern) {
    std::vector<CoefSet> sets;
    sets.reserve(pattern.rows);
    for (int r = 0; r < pattern.rows; ++r) {
        CoefSet s;
        s.row = r;
        for (int c = 0; c < pattern.cols; ++c) {
            if (pattern.is_allowed(r, c)) s.columns.push_back(c);
        }
        sets.push_back(std::move(s));
    }
    return sets;
}

ReceivingMatrix receiving_matrix(const EncodingMatrix& e, ClientId i) {
    ReceivingPattern view = receiving_pattern(e.pattern, i);
    FieldMatrix values(e.field(), view.rows, view.cols);
    for (int r = 0; r < view.rows; ++r) {
        for (int c = 0; c < view.cols; ++c) {
            values.at(r, c) = e.values.at(view.row_sources[r], view.col_sources[c]);
        }
    }
    return ReceivingMatrix{i, std::move(values), wanted_packets(e.pattern.n, i),
                           std::move(view.col_sources)};
}

bool can_decode(const ReceivingMatrix& r) {
    return r.values.rank() == r.values.rows();
}

std::vector<int> transversal_assignment(const ReceivingPattern& pattern) {
    BipartiteMatching matching(pattern.rows, pattern.cols);
    for (int r = 0; r < pattern.rows; ++r) {
        for (int c = 0; c < pattern.cols; ++c) {
            if (pattern.is_allowed(r, c)) matching.add_edge(r, c);
        }
    }
    if (matching.solve() < pattern.rows) {
        std::vector<int> deficient = matching.deficient_left_set();
        throw HallViolationError("no transversal: " + std::to_string(deficient.size()) +
                                     " rows share fewer than that many allowed columns",
                                 deficient);
    }
    return matching.left_match();
}

EncodingMatrix random_code(int n, const TransmissionScheme& scheme, const Field& field,
                           std::uint64_t seed) {
    SparsityPattern pattern = build_pattern(n, scheme);
    FieldMatrix values(field, pattern.rows, pattern.cols);

    // Row-major draw order; one engine per matrix. Masking the raw 64-bit
    // output with q-1 is unbiased because q is a power of two.
    std::mt19937_64 engine(seed);
    const std::uint64_t mask = field.order() - 1;
    for (int r = 0; r < pattern.rows; ++r) {
        for (int c = 0; c < pattern.cols; ++c) {
            if (pattern.is_allowed(r, c)) {
                values.at(r, c) = static_cast<FieldElement>(engine() & mask);
            }
        }
    }
    return EncodingMatrix{std::move(pattern), std::move(values)};
}

VerifiedCode construct_verified_code(int n, const TransmissionScheme& scheme,
                                     const Field& field, std::uint64_t seed,
                                     int max_retries) {
    if (max_retries < 1) throw InvalidProblemError("need at least one attempt");
    FeasibilityVerdict verdict = is_feasible(n, scheme);
    if (!verdict.feasible) {
        throw InvalidProblemError("scheme is infeasible: no code can serve every client");
    }

    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        EncodingMatrix code = random_code(n, scheme, field, derive_seed(seed, attempt - 1));
        bool all_decode = true;
        for (int i = 1; i <= n && all_decode; ++i) {
            all_decode = can_decode(receiving_matrix(code, ClientId(i)));
        }
        if (all_decode) return VerifiedCode{std::move(code), attempt};
    }
    throw ConstructionError("no universally decodable code in " +
                                std::to_string(max_retries) + " attempts",
                            max_retries);
}

std::vector<FieldElement> encode(const EncodingMatrix& e,
                                 std::span<const FieldElement> natives) {
    if (static_cast<int>(natives.size()) != e.pattern.rows) {
        throw InvalidProblemError("need one native packet value per universe row");
    }
    const Field& f = e.field();
    std::vector<FieldElement> transmitted(e.pattern.cols, 0);
    for (int c = 0; c < e.pattern.cols; ++c) {
        FieldElement acc = 0;
        for (int r = 0; r < e.pattern.rows; ++r) {
            acc = f.add(acc, f.mul(e.values.at(r, c), natives[r]));
        }
        transmitted[c] = acc;
    }
    return transmitted;
}

std::map<PacketId, FieldElement> decode(const EncodingMatrix& e, ClientId i,
                                        std::span<const FieldElement> received,
                                        const std::map<PacketId, FieldElement>& known) {
    const Field& f = e.field();
    const int n = e.pattern.n;
    ReceivingMatrix r = receiving_matrix(e, i);
    if (static_cast<int>(received.size()) != r.values.cols()) {
        throw InvalidProblemError("expected one received symbol per other-client column");
    }

    PacketUniverse universe = packet_universe(n);
    std::vector<PacketId> held = held_packets(n, i);
    for (const PacketId& p : held) {
        if (!known.count(p)) throw InvalidProblemError("missing a held packet value");
    }

    // Strip the known packets' contributions, leaving equations in the
    // wanted values only: b[c] = received[c] - sum_held E[row][col] * value.
    std::vector<FieldElement> b(received.begin(), received.end());
    for (int c = 0; c < r.values.cols(); ++c) {
        int col = r.col_sources[c];
        for (const PacketId& p : held) {
            FieldElement coef = e.values.at(universe.row_of(p), col);
            b[c] = f.sub(b[c], f.mul(coef, known.at(p)));
        }
    }

    std::vector<FieldElement> unknowns = r.values.transposed().solve(b);
    std::map<PacketId, FieldElement> out;
    for (std::size_t w = 0; w < r.row_packets.size(); ++w) {
        out.emplace(r.row_packets[w], unknowns[w]);
    }
    return out;
}

} // namespace tpx
