#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "tpx/coding.hpp"
#include "tpx/errors.hpp"
#include "tpx/feasibility.hpp"
#include "tpx/rng.hpp"
#include "tpx/solver.hpp"

using namespace tpx;

namespace {

// Exhaustive distinct-representatives check: every set of rows must touch at
// least as many allowed columns. Only for small patterns.
bool hall_condition_holds(const ReceivingPattern& p) {
    for (unsigned mask = 1; mask < (1u << p.rows); ++mask) {
        std::set<int> touched;
        int count = 0;
        for (int r = 0; r < p.rows; ++r) {
            if (!(mask & (1u << r))) continue;
            ++count;
            for (int c = 0; c < p.cols; ++c) {
                if (p.is_allowed(r, c)) touched.insert(c);
            }
        }
        if (static_cast<int>(touched.size()) < count) return false;
    }
    return true;
}

std::vector<FieldElement> random_payload(const Field& f, int count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<FieldElement> v(static_cast<std::size_t>(count));
    for (auto& x : v) x = static_cast<FieldElement>(gen() & (f.order() - 1));
    return v;
}

// Round-trip: encode under e, then decode at every client from its own
// received slice and held packet values; require exact recovery.
void check_full_exchange(const EncodingMatrix& e, std::uint64_t payload_seed) {
    int n = e.pattern.n;
    const Field& f = e.field();
    PacketUniverse universe = packet_universe(n);
    std::vector<FieldElement> natives =
        random_payload(f, static_cast<int>(universe.packets.size()), payload_seed);
    std::vector<FieldElement> transmitted = encode(e, natives);

    for (int i = 1; i <= n; ++i) {
        ClientId client(i);
        ReceivingMatrix r = receiving_matrix(e, client);
        std::vector<FieldElement> received;
        for (int c : r.col_sources) received.push_back(transmitted[static_cast<std::size_t>(c)]);
        std::map<PacketId, FieldElement> known;
        for (const PacketId& p : held_packets(n, client)) {
            known[p] = natives[static_cast<std::size_t>(universe.row_of(p))];
        }
        std::map<PacketId, FieldElement> out = decode(e, client, received, known);
        REQUIRE(out.size() == wanted_packets(n, client).size());
        for (const auto& [packet, value] : out) {
            CHECK(value == natives[static_cast<std::size_t>(universe.row_of(packet))]);
        }
    }
}

} // namespace

TEST_CASE("pattern shape for three clients sending 1,1,0") {
    SparsityPattern p = build_pattern(3, TransmissionScheme({1, 1, 0}));
    CHECK(p.rows == 3);
    CHECK(p.cols == 2);
    CHECK(p.column_owner == std::vector<int>{1, 2});
    // Column 0 belongs to client 1, which holds (1,2) and (1,3): rows 0, 1.
    CHECK(p.is_allowed(0, 0));
    CHECK(p.is_allowed(1, 0));
    CHECK_FALSE(p.is_allowed(2, 0));
    // Column 1 belongs to client 2, which holds (1,2) and (2,3): rows 0, 2.
    CHECK(p.is_allowed(0, 1));
    CHECK_FALSE(p.is_allowed(1, 1));
    CHECK(p.is_allowed(2, 1));
}

TEST_CASE("pattern columns allow exactly the owner's held rows") {
    SparsityPattern p = build_pattern(4, TransmissionScheme({1, 1, 1, 1}));
    CHECK(p.rows == 6);
    CHECK(p.cols == 4);
    PacketUniverse universe = packet_universe(4);
    for (int c = 0; c < p.cols; ++c) {
        ClientId owner(p.column_owner[static_cast<std::size_t>(c)]);
        int allowed_count = 0;
        for (int r = 0; r < p.rows; ++r) {
            bool holds = universe.packets[static_cast<std::size_t>(r)].involves(owner);
            CHECK(p.is_allowed(r, c) == holds);
            allowed_count += p.is_allowed(r, c) ? 1 : 0;
        }
        CHECK(allowed_count == 3); // n-1 held packets per sender
    }

    // Multi-column senders repeat their sparsity column-for-column.
    SparsityPattern q = build_pattern(4, TransmissionScheme({2, 2, 1, 0}));
    CHECK(q.cols == 5);
    CHECK(q.column_owner == std::vector<int>{1, 1, 2, 2, 3});
    for (int r = 0; r < q.rows; ++r) CHECK(q.is_allowed(r, 0) == q.is_allowed(r, 1));
}

TEST_CASE("receiving pattern drops own columns and held rows") {
    SparsityPattern p = build_pattern(3, TransmissionScheme({1, 1, 0}));

    ReceivingPattern r3 = receiving_pattern(p, ClientId(3));
    CHECK(r3.rows == 1); // wants only (1,2)
    CHECK(r3.cols == 2); // hears clients 1 and 2
    CHECK(r3.is_allowed(0, 0));
    CHECK(r3.is_allowed(0, 1));

    ReceivingPattern r1 = receiving_pattern(p, ClientId(1));
    CHECK(r1.rows == 1); // wants only (2,3)
    CHECK(r1.cols == 1); // hears only client 2's single column
    CHECK(r1.col_sources == std::vector<int>{1});
    CHECK(r1.is_allowed(0, 0));

    // A larger instance keeps the advertised shape.
    SparsityPattern big = build_pattern(5, TransmissionScheme({2, 2, 1, 1, 0}));
    ReceivingPattern r = receiving_pattern(big, ClientId(2));
    CHECK(r.rows == 6);          // (4)(3)/2 wanted packets
    CHECK(r.cols == big.cols - 2);
    CHECK(r.row_sources.size() == 6);
    for (int c : r.col_sources) {
        CHECK(big.column_owner[static_cast<std::size_t>(c)] != 2);
    }
}

TEST_CASE("coefficient sets list the allowed columns per row") {
    SparsityPattern p = build_pattern(3, TransmissionScheme({1, 1, 0}));
    std::vector<CoefSet> sets = coef_sets(receiving_pattern(p, ClientId(3)));
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].row == 0);
    CHECK(sets[0].columns == std::vector<int>{0, 1});

    SparsityPattern q = build_pattern(4, TransmissionScheme({1, 1, 1, 1}));
    std::vector<CoefSet> qs = coef_sets(receiving_pattern(q, ClientId(1)));
    REQUIRE(qs.size() == 3);
    for (const CoefSet& s : qs) CHECK(s.columns.size() == 2); // two owners hold each pair
}

TEST_CASE("transversal assignment is a system of distinct representatives") {
    std::mt19937_64 gen(derive_seed(0xc0de, 0));
    int checked = 0;
    while (checked < 120) {
        int n = 3 + static_cast<int>(gen() % 4);
        std::vector<int> y(static_cast<std::size_t>(n));
        for (int& v : y) v = static_cast<int>(gen() % 4);
        TransmissionScheme scheme(y);
        if (!is_feasible(n, scheme).feasible) continue;
        ++checked;
        SparsityPattern p = build_pattern(n, scheme);
        for (int i = 1; i <= n; ++i) {
            ReceivingPattern rp = receiving_pattern(p, ClientId(i));
            std::vector<int> match = transversal_assignment(rp);
            REQUIRE(static_cast<int>(match.size()) == rp.rows);
            std::set<int> used;
            for (int r = 0; r < rp.rows; ++r) {
                CHECK(rp.is_allowed(r, match[static_cast<std::size_t>(r)]));
                used.insert(match[static_cast<std::size_t>(r)]);
            }
            CHECK(static_cast<int>(used.size()) == rp.rows); // all distinct
        }
    }
}

TEST_CASE("transversal entries give full rank over tiny and byte fields") {
    Field gf2(1);
    Field gf256(8);
    for (auto [n, y] : std::vector<std::pair<int, std::vector<int>>>{
             {3, {1, 1, 0}}, {4, {1, 1, 1, 1}}, {4, {2, 2, 1, 0}}, {5, {3, 3, 2, 1, 0}},
             {6, {2, 2, 2, 2, 2, 2}}}) {
        TransmissionScheme scheme(y);
        REQUIRE(is_feasible(n, scheme).feasible);
        SparsityPattern p = build_pattern(n, scheme);
        for (const Field* f : {&gf2, &gf256}) {
            for (int i = 1; i <= n; ++i) {
                ReceivingPattern rp = receiving_pattern(p, ClientId(i));
                std::vector<int> match = transversal_assignment(rp);
                FieldMatrix m(*f, rp.rows, rp.cols);
                for (int r = 0; r < rp.rows; ++r) m.at(r, match[static_cast<std::size_t>(r)]) = 1;
                CHECK(m.rank() == rp.rows);
            }
        }
    }
}

TEST_CASE("matching agrees with the exhaustive distinct-representatives test") {
    std::mt19937_64 gen(derive_seed(0xc0de, 1));
    int with = 0;
    int without = 0;
    for (int trial = 0; trial < 400; ++trial) {
        // Hand-rolled small patterns, not necessarily from any scheme.
        ReceivingPattern p;
        p.rows = 1 + static_cast<int>(gen() % 5);
        p.cols = 1 + static_cast<int>(gen() % 6);
        p.allowed.assign(static_cast<std::size_t>(p.rows) * p.cols, 0);
        for (auto& a : p.allowed) a = (gen() % 3) == 0 ? 1 : 0;
        p.row_sources.resize(static_cast<std::size_t>(p.rows));
        p.col_sources.resize(static_cast<std::size_t>(p.cols));

        bool hall = hall_condition_holds(p);
        if (hall) {
            ++with;
            std::vector<int> match = transversal_assignment(p);
            std::set<int> used;
            for (int r = 0; r < p.rows; ++r) {
                CHECK(p.is_allowed(r, match[static_cast<std::size_t>(r)]));
                used.insert(match[static_cast<std::size_t>(r)]);
            }
            CHECK(static_cast<int>(used.size()) == p.rows);
        } else {
            ++without;
            CHECK_THROWS_AS(transversal_assignment(p), HallViolationError);
        }
    }
    CHECK(with > 40);    // both branches exercised
    CHECK(without > 40);
}

TEST_CASE("hall violations carry a genuinely deficient row set") {
    // One infeasible scheme: y = (3,0,0,0) starves clients 2..4.
    SparsityPattern p = build_pattern(4, TransmissionScheme({3, 0, 0, 0}));
    ReceivingPattern rp = receiving_pattern(p, ClientId(2));
    try {
        transversal_assignment(rp);
        FAIL("expected a Hall violation");
    } catch (const HallViolationError& e) {
        const std::vector<int>& rows = e.deficient_rows();
        REQUIRE(!rows.empty());
        std::set<int> touched;
        for (int r : rows) {
            REQUIRE(r < rp.rows);
            for (int c = 0; c < rp.cols; ++c) {
                if (rp.is_allowed(r, c)) touched.insert(c);
            }
        }
        CHECK(touched.size() < rows.size());
    }
}

TEST_CASE("random codes are deterministic and respect the pattern") {
    Field f(8);
    TransmissionScheme scheme({2, 2, 1, 0});
    EncodingMatrix a = random_code(4, scheme, f, 1234);
    EncodingMatrix b = random_code(4, scheme, f, 1234);
    CHECK(a.values == b.values);

    EncodingMatrix c = random_code(4, scheme, f, 1235);
    CHECK_FALSE(a.values == c.values); // astronomically unlikely to collide

    int nonzero_disallowed = 0;
    int nonzero_allowed = 0;
    for (int r = 0; r < a.pattern.rows; ++r) {
        for (int col = 0; col < a.pattern.cols; ++col) {
            if (a.values.at(r, col) != 0) {
                ++(a.pattern.is_allowed(r, col) ? nonzero_allowed : nonzero_disallowed);
            }
        }
    }
    CHECK(nonzero_disallowed == 0);
    CHECK(nonzero_allowed > 0);
}

TEST_CASE("verified construction decodes for every client") {
    Field f(8);
    std::mt19937_64 gen(derive_seed(0xc0de, 2));
    for (int n = 3; n <= 8; ++n) {
        OptimalScheme fewest = solve_min_transmissions(n);
        VerifiedCode code = construct_verified_code(n, fewest.scheme, f, gen(), 64);
        CHECK(code.attempts >= 1);
        for (int i = 1; i <= n; ++i) {
            CHECK(can_decode(receiving_matrix(code.matrix, ClientId(i))));
        }
        check_full_exchange(code.matrix, derive_seed(0xda7a, static_cast<std::uint64_t>(n)));
    }
}

TEST_CASE("verified construction rejects infeasible schemes up front") {
    Field f(8);
    CHECK_THROWS_AS(construct_verified_code(4, TransmissionScheme({3, 0, 0, 0}), f, 7, 16),
                    InvalidProblemError);
    CHECK_THROWS_AS(construct_verified_code(3, TransmissionScheme({0, 0, 0}), f, 7, 16),
                    InvalidProblemError);
}

TEST_CASE("construction failure reports the attempt budget") {
    // Over GF(2) a random 1x1 receiving entry is zero half the time, so one
    // attempt with an adversarial seed search must eventually fail; instead
    // of hunting seeds, give a budget of 1 and accept either outcome, then
    // verify the error carries the attempt count when it does fail.
    Field f(1);
    int failures = 0;
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        try {
            construct_verified_code(3, TransmissionScheme({1, 1, 0}), f, seed, 1);
        } catch (const ConstructionError& e) {
            ++failures;
            CHECK(e.attempts() == 1);
        }
    }
    CHECK(failures > 0);  // q=2 fails often
    CHECK(failures < 24); // but not always
}

TEST_CASE("retry seeds are derived, so more retries extend the same run") {
    Field f(1);
    // With a generous budget the construction virtually always lands; the
    // attempt count must never exceed the budget.
    VerifiedCode code = construct_verified_code(4, TransmissionScheme({1, 1, 1, 1}), f, 99, 256);
    CHECK(code.attempts >= 1);
    CHECK(code.attempts <= 256);
    for (int i = 1; i <= 4; ++i) {
        CHECK(can_decode(receiving_matrix(code.matrix, ClientId(i))));
    }

    // Same seed, bigger budget: the successful attempt index is identical
    // because per-attempt seeds depend only on (seed, attempt).
    VerifiedCode again = construct_verified_code(4, TransmissionScheme({1, 1, 1, 1}), f, 99, 512);
    CHECK(again.attempts == code.attempts);
    CHECK(again.matrix.values == code.matrix.values);
}

TEST_CASE("encode is linear and respects column grouping") {
    Field f(8);
    TransmissionScheme scheme({1, 1, 0});
    EncodingMatrix e = random_code(3, scheme, f, 42);

    std::vector<FieldElement> zero(3, 0);
    CHECK(encode(e, zero) == std::vector<FieldElement>(2, 0));

    std::vector<FieldElement> x = random_payload(f, 3, 7);
    std::vector<FieldElement> y = random_payload(f, 3, 8);
    std::vector<FieldElement> sum(3);
    for (int i = 0; i < 3; ++i) sum[static_cast<std::size_t>(i)] =
        f.add(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i)]);

    std::vector<FieldElement> ex = encode(e, x);
    std::vector<FieldElement> ey = encode(e, y);
    std::vector<FieldElement> esum = encode(e, sum);
    for (int c = 0; c < 2; ++c) {
        CHECK(esum[static_cast<std::size_t>(c)] ==
              f.add(ex[static_cast<std::size_t>(c)], ey[static_cast<std::size_t>(c)]));
    }

    // A transmission mixes only packets its sender holds.
    PacketUniverse u = packet_universe(3);
    std::vector<FieldElement> probe(3, 0);
    probe[static_cast<std::size_t>(u.row_of(PacketId(ClientId(2), ClientId(3))))] = 1;
    // Client 1 does not hold (2,3): its column must ignore the probe.
    CHECK(encode(e, probe)[0] == 0);
}

TEST_CASE("decode round-trips across sizes and fields") {
    for (int m : {4, 8, 12}) {
        Field f(m);
        std::mt19937_64 gen(derive_seed(0xc0de, static_cast<std::uint64_t>(m)));
        for (int n = 3; n <= 6; ++n) {
            std::vector<int> y(static_cast<std::size_t>(n));
            y[0] = n - 2;
            for (int i = 1; i < n; ++i) y[static_cast<std::size_t>(i)] = n - 1 - i;
            VerifiedCode code = construct_verified_code(n, TransmissionScheme(y), f, gen(), 64);
            check_full_exchange(code.matrix, gen());
        }
    }
}

TEST_CASE("hand-built deterministic coefficients decode outright") {
    // No randomness: client 1 sends its two packets summed, client 2 likewise.
    // Every client can then isolate its one missing packet by subtraction.
    Field f(2);
    TransmissionScheme scheme({1, 1, 0});
    SparsityPattern p = build_pattern(3, scheme);
    EncodingMatrix e{p, FieldMatrix(f, p.rows, p.cols)};
    PacketUniverse u = packet_universe(3);
    int r12 = u.row_of(PacketId(ClientId(1), ClientId(2)));
    int r13 = u.row_of(PacketId(ClientId(1), ClientId(3)));
    int r23 = u.row_of(PacketId(ClientId(2), ClientId(3)));
    e.values.at(r12, 0) = 1;
    e.values.at(r13, 0) = 1;
    e.values.at(r12, 1) = 1;
    e.values.at(r23, 1) = 1;

    for (int i = 1; i <= 3; ++i) CHECK(can_decode(receiving_matrix(e, ClientId(i))));
    check_full_exchange(e, 99);
}

TEST_CASE("decode validates its inputs") {
    Field f(8);
    EncodingMatrix e = random_code(3, TransmissionScheme({1, 1, 0}), f, 11);
    std::map<PacketId, FieldElement> known;
    for (const PacketId& p : held_packets(3, ClientId(1))) known[p] = 5;

    std::vector<FieldElement> too_short; // client 1 receives exactly one symbol
    CHECK_THROWS_AS(decode(e, ClientId(1), too_short, known), InvalidProblemError);

    std::vector<FieldElement> one(1, 3);
    std::map<PacketId, FieldElement> missing; // held values absent
    CHECK_THROWS_AS(decode(e, ClientId(1), one, missing), InvalidProblemError);
}

TEST_CASE("matrix JSON lists sparse columns in owner order") {
    Field f(8);
    TransmissionScheme scheme({1, 1, 0});
    EncodingMatrix e = random_code(3, scheme, f, 3);
    std::string json = encoding_matrix_to_json(e);
    CHECK(json.find("\"n\":3") != std::string::npos);
    CHECK(json.find("\"y\":[1,1,0]") != std::string::npos);
    CHECK(json.find("\"field_m\":8") != std::string::npos);
    CHECK(json.find("\"columns\":[") != std::string::npos);
    CHECK(json.find("\"owner\":1") != std::string::npos);
    CHECK(json.find("\"owner\":2") != std::string::npos);
}
