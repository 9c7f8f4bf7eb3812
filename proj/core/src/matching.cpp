#include "tpx/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace tpx {

namespace {
constexpr int kUnreached = std::numeric_limits<int>::max();
}

BipartiteMatching::BipartiteMatching(int left, int right)
    : left_(left),
      right_(right),
      adj_(left >= 0 ? left : 0),
      match_left_(left >= 0 ? left : 0, -1),
      match_right_(right >= 0 ? right : 0, -1),
      dist_(left >= 0 ? left : 0, 0) {
    if (left < 0 || right < 0) throw std::invalid_argument("negative vertex count");
}

void BipartiteMatching::add_edge(int from, int to) {
    if (from < 0 || from >= left_ || to < 0 || to >= right_) {
        throw std::out_of_range("matching edge endpoint out of range");
    }
    adj_[from].push_back(to);
    if (solved_) {
        std::fill(match_left_.begin(), match_left_.end(), -1);
        std::fill(match_right_.begin(), match_right_.end(), -1);
        solved_ = false;
    }
}

bool BipartiteMatching::bfs() {
    std::queue<int> frontier;
    for (int u = 0; u < left_; ++u) {
        if (match_left_[u] == -1) {
            dist_[u] = 0;
            frontier.push(u);
        } else {
            dist_[u] = kUnreached;
        }
    }
    bool found_free = false;
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v : adj_[u]) {
            int w = match_right_[v];
            if (w == -1) {
                found_free = true;
            } else if (dist_[w] == kUnreached) {
                dist_[w] = dist_[u] + 1;
                frontier.push(w);
            }
        }
    }
    return found_free;
}

bool BipartiteMatching::dfs(int u) {
    for (int v : adj_[u]) {
        int w = match_right_[v];
        if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
            match_left_[u] = v;
            match_right_[v] = u;
            return true;
        }
    }
    dist_[u] = kUnreached;
    return false;
}

int BipartiteMatching::solve() {
    if (!solved_) {
        while (bfs()) {
            for (int u = 0; u < left_; ++u) {
                if (match_left_[u] == -1) dfs(u);
            }
        }
        solved_ = true;
    }
    return static_cast<int>(std::count_if(match_left_.begin(), match_left_.end(),
                                          [](int v) { return v != -1; }));
}

std::vector<int> BipartiteMatching::deficient_left_set() const {
    std::vector<int> unmatched;
    for (int u = 0; u < left_; ++u) {
        if (match_left_[u] == -1) unmatched.push_back(u);
    }
    if (unmatched.empty()) return {};

    // Left vertices reachable from an unmatched one via alternating paths
    // (free edge rightward, matched edge back) form a set D whose
    // neighbourhood has exactly |D| - #unmatched vertices, so |N(D)| < |D|.
    std::vector<bool> seen_left(left_, false);
    std::vector<bool> seen_right(right_, false);
    std::vector<int> stack = unmatched;
    for (int u : unmatched) seen_left[u] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj_[u]) {
            if (seen_right[v]) continue;
            seen_right[v] = true;
            int w = match_right_[v];
            if (w != -1 && !seen_left[w]) {
                seen_left[w] = true;
                stack.push_back(w);
            }
        }
    }
    std::vector<int> deficient;
    for (int u = 0; u < left_; ++u) {
        if (seen_left[u]) deficient.push_back(u);
    }
    return deficient;
}

} // namespace tpx
