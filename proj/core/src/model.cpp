#include "tpx/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace tpx {

ExchangeProblem::ExchangeProblem(int num_clients, std::vector<Rational> client_costs)
    : n(num_clients), costs(std::move(client_costs)) {
    if (n < 3) throw InvalidProblemError("need at least three clients");
    if (static_cast<int>(costs.size()) != n) {
        throw InvalidProblemError("cost vector length must equal the client count");
    }
    for (const Rational& c : costs) {
        if (c < Rational(0)) throw InvalidProblemError("costs must be non-negative");
    }
}

TransmissionScheme::TransmissionScheme(std::vector<int> counts) : y(std::move(counts)) {
    for (int v : y) {
        if (v < 0) throw InvalidProblemError("transmit counts must be non-negative");
    }
}

int TransmissionScheme::total() const {
    return std::accumulate(y.begin(), y.end(), 0);
}

int PacketUniverse::row_of(const PacketId& p) const {
    int a = p.a.index;
    int b = p.b.index;
    if (b > n) throw InvalidClientError("packet endpoint outside universe");
    // Pairs with first endpoint < a fill the rows before a's block.
    return (a - 1) * n - a * (a + 1) / 2 + b - 1;
}

PacketUniverse packet_universe(int n) {
    if (n < 3) throw InvalidProblemError("need at least three clients");
    PacketUniverse u{n, {}};
    u.packets.reserve(static_cast<std::size_t>(choose2(n)));
    for (int a = 1; a < n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            u.packets.emplace_back(ClientId(a), ClientId(b));
        }
    }
    return u;
}

std::vector<PacketId> held_packets(int n, ClientId i) {
    if (n < 3) throw InvalidProblemError("need at least three clients");
    if (i.index > n) throw InvalidClientError("client index exceeds client count");
    std::vector<PacketId> held;
    held.reserve(static_cast<std::size_t>(n) - 1);
    // Ascending j yields canonical (min,max) pairs already in universe order.
    for (int j = 1; j <= n; ++j) {
        if (j != i.index) held.emplace_back(i, ClientId(j));
    }
    return held;
}

std::vector<PacketId> wanted_packets(int n, ClientId i) {
    if (i.index > n) throw InvalidClientError("client index exceeds client count");
    std::vector<PacketId> wanted;
    wanted.reserve(static_cast<std::size_t>(choose2(n - 1)));
    for (const PacketId& p : packet_universe(n).packets) {
        if (!p.involves(i)) wanted.push_back(p);
    }
    return wanted;
}

std::vector<ClientId> idx_set(std::span<const PacketId> packets) {
    if (packets.empty()) throw InvalidProblemError("idx_set of an empty packet set");
    std::set<int> indices;
    for (const PacketId& p : packets) {
        indices.insert(p.a.index);
        indices.insert(p.b.index);
    }
    std::vector<ClientId> out;
    out.reserve(indices.size());
    for (int idx : indices) out.emplace_back(idx);
    return out;
}

int min_clients_covering(long long r) {
    if (r < 1) throw InvalidProblemError("packet subset size must be >= 1");
    // Unique k with choose2(k-1) < r <= choose2(k).
    auto k = static_cast<long long>(std::ceil((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(r))) / 2.0));
    while (choose2(k) < r) ++k;
    while (k > 2 && choose2(k - 1) >= r) --k;
    return static_cast<int>(k);
}

Rational total_cost(const ExchangeProblem& problem, const TransmissionScheme& scheme) {
    if (scheme.clients() != problem.n) {
        throw InvalidProblemError("scheme length must equal the client count");
    }
    Rational sum(0);
    for (int i = 0; i < problem.n; ++i) {
        sum += problem.costs[i] * Rational(scheme.y[i]);
    }
    return sum;
}

} // namespace tpx
