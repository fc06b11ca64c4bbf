#pragma once

#include <cstdint>
#include <vector>

namespace indel {

/// Dense undirected graph stored as a bit matrix, sized for the exact-search
/// caps used by the constant-weight and oracle modules.
class BitGraph {
public:
    explicit BitGraph(int vertex_count);

    int size() const { return n_; }
    int words_per_row() const { return words_; }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct CliqueSearchResult {
    std::vector<int> vertices; ///< best clique found, ascending vertex order
    bool completed = false;    ///< true when optimality was proven within budget
    std::uint64_t nodes = 0;   ///< branch-and-bound nodes expanded
};

/// Exact maximum clique by branch and bound with greedy sequential coloring
/// bounds and a greedy initial clique. Deterministic: vertices are processed
/// in input order. When the node budget runs out the best clique found so far
/// is returned with completed == false (a valid lower bound only).
CliqueSearchResult max_clique(const BitGraph& g, std::uint64_t node_budget);

} // namespace indel
