#ifndef TPX_MATCHING_HPP
#define TPX_MATCHING_HPP

#include <vector>

namespace tpx {

/// Maximum bipartite matching via Hopcroft-Karp, plus a Hall-condition
/// witness when the left side cannot be saturated.
class BipartiteMatching {
public:
    BipartiteMatching(int left, int right);

    void add_edge(int from, int to);

    /// Size of a maximum matching. Idempotent.
    int solve();

    /// Matched right vertex per left vertex, -1 if unmatched. Valid after solve().
    const std::vector<int>& left_match() const { return match_left_; }
    const std::vector<int>& right_match() const { return match_right_; }

    /// A deficient left set D with |neighbours(D)| < |D|, sorted ascending;
    /// empty when the matching saturates the left side. Valid after solve().
    std::vector<int> deficient_left_set() const;

private:
    bool bfs();
    bool dfs(int u);

    int left_ = 0;
    int right_ = 0;
    bool solved_ = false;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_left_;
    std::vector<int> match_right_;
    std::vector<int> dist_;
};

} // namespace tpx

#endif // TPX_MATCHING_HPP
