#ifndef TPX_MODEL_HPP
#define TPX_MODEL_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tpx/errors.hpp"
#include "tpx/rational.hpp"

namespace tpx {

/// 1-based client index.
struct ClientId {
    int index;

    explicit ClientId(int idx) : index(idx) {
        if (idx < 1) throw InvalidClientError("client index must be >= 1");
    }

    auto operator<=>(const ClientId&) const = default;
};

/// Unordered client pair identifying the link packet shared by two clients.
/// Stored canonically with a < b; {i,j} and {j,i} compare equal.
struct PacketId {
    ClientId a;
    ClientId b;

    PacketId(ClientId x, ClientId y) : a(x < y ? x : y), b(x < y ? y : x) {
        if (x == y) throw InvalidProblemError("packet endpoints must differ");
    }

    bool involves(ClientId c) const { return a == c || b == c; }

    auto operator<=>(const PacketId&) const = default;
};

/// A problem instance: N clients, each with a per-packet transmission cost.
struct ExchangeProblem {
    int n;
    std::vector<Rational> costs;

    ExchangeProblem(int num_clients, std::vector<Rational> client_costs);
};

/// Per-client transmit counts y.
struct TransmissionScheme {
    std::vector<int> y;

    TransmissionScheme() = default;
    explicit TransmissionScheme(std::vector<int> counts);

    int clients() const { return static_cast<int>(y.size()); }
    int total() const;

    bool operator==(const TransmissionScheme&) const = default;
};

/// All K = N(N-1)/2 packets in the fixed row order of the encoding matrix:
/// (1,2),(1,3),...,(1,N),(2,3),...,(N-1,N).
struct PacketUniverse {
    int n;
    std::vector<PacketId> packets;

    /// Row index of a packet in this ordering.
    int row_of(const PacketId& p) const;
};

/// k*(k-1)/2, the number of unordered pairs among k items.
constexpr long long choose2(long long k) { return k < 2 ? 0 : k * (k - 1) / 2; }

PacketUniverse packet_universe(int n);

/// X_i: the N-1 packets client i holds initially, in universe order.
std::vector<PacketId> held_packets(int n, ClientId i);

/// Complement of X_i within the universe; (N-1)(N-2)/2 packets, universe order.
std::vector<PacketId> wanted_packets(int n, ClientId i);

/// Clients holding at least one packet of the set: the union of all endpoint
/// pairs, sorted ascending. Throws std::invalid_argument on an empty set.
std::vector<ClientId> idx_set(std::span<const PacketId> packets);

/// Smallest possible |idx_set| over all r-subsets of any packet universe:
/// the unique k with choose2(k-1) < r <= choose2(k).
int min_clients_covering(long long r);

/// Sum of cost_i * y_i.
Rational total_cost(const ExchangeProblem& problem, const TransmissionScheme& scheme);

/// Reads {"num_clients": N, "costs": [...]} where each cost is an integer or
/// a decimal string. Throws InvalidProblemError with a diagnostic otherwise.
ExchangeProblem parse_problem_json(const std::string& text);

} // namespace tpx

#endif // TPX_MODEL_HPP
