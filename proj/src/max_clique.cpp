#include "indel/max_clique.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace indel {

BitGraph::BitGraph(int vertex_count)
    : n_(vertex_count), words_((vertex_count + 63) / 64),
      rows_(static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>((vertex_count + 63) / 64), 0) {
    if (vertex_count < 0) throw std::invalid_argument("BitGraph: negative size");
}

void BitGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("BitGraph: self loop");
    rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63);
    rows_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u >> 6)] |= 1ull << (u & 63);
}

bool BitGraph::adjacent(int u, int v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1ull;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any_bit(const Bits& b) {
    for (std::uint64_t w : b)
        if (w) return true;
    return false;
}

int first_bit(const Bits& b) {
    for (std::size_t k = 0; k < b.size(); ++k)
        if (b[k]) return static_cast<int>(k * 64) + std::countr_zero(b[k]);
    return -1;
}

void clear_bit(Bits& b, int v) { b[static_cast<std::size_t>(v >> 6)] &= ~(1ull << (v & 63)); }

void and_row(Bits& b, const std::uint64_t* row) {
    for (std::size_t k = 0; k < b.size(); ++k) b[k] &= row[k];
}

void and_not_row(Bits& b, const std::uint64_t* row) {
    for (std::size_t k = 0; k < b.size(); ++k) b[k] &= ~row[k];
}

struct Searcher {
    const BitGraph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool aborted = false;
    std::vector<int> best;
    std::vector<int> current;

    void expand(Bits& cand) {
        if (aborted) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        // greedy sequential coloring of the candidate set; color numbers are
        // upper bounds on any clique inside the remaining candidates
        std::vector<int> order;
        std::vector<int> colors;
        Bits uncolored = cand;
        int color = 0;
        while (any_bit(uncolored)) {
            ++color;
            Bits cls = uncolored;
            while (true) {
                const int v = first_bit(cls);
                if (v < 0) break;
                clear_bit(cls, v);
                clear_bit(uncolored, v);
                order.push_back(v);
                colors.push_back(color);
                and_not_row(cls, g.row(v)); // class members must be pairwise non-adjacent
            }
        }
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (static_cast<int>(current.size()) + colors[static_cast<std::size_t>(idx)] <=
                static_cast<int>(best.size()))
                return; // colors ascending along `order` prunes all remaining
            const int v = order[static_cast<std::size_t>(idx)];
            current.push_back(v);
            if (current.size() > best.size()) best = current;
            Bits next = cand;
            and_row(next, g.row(v));
            if (any_bit(next)) expand(next);
            current.pop_back();
            if (aborted) return;
            clear_bit(cand, v);
        }
    }
};

} // namespace

CliqueSearchResult max_clique(const BitGraph& g, std::uint64_t node_budget) {
    CliqueSearchResult result;
    const int n = g.size();
    if (n == 0) {
        result.completed = true;
        return result;
    }
    Searcher s{g, node_budget};
    // greedy initial clique in vertex order seeds the bound
    std::vector<int> greedy;
    for (int v = 0; v < n; ++v) {
        bool ok = true;
        for (int u : greedy) {
            if (!g.adjacent(u, v)) {
                ok = false;
                break;
            }
        }
        if (ok) greedy.push_back(v);
    }
    s.best = greedy;

    Bits all(static_cast<std::size_t>(g.words_per_row()), 0);
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63);
    s.expand(all);

    result.vertices = s.best;
    std::sort(result.vertices.begin(), result.vertices.end());
    result.completed = !s.aborted;
    result.nodes = s.nodes;
    return result;
}

} // namespace indel
