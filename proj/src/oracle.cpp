#include "indel/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "indel/levenshtein.hpp"
#include "indel/max_clique.hpp"

namespace indel {

namespace {

// all words of [q]^n in lexicographic order
std::vector<Word> all_words(int q, int n, std::uint64_t cap) {
    const BigInt space = int_pow(q, n);
    if (space > cap)
        throw std::invalid_argument("enumeration space q^n = " + space.str() +
                                    " exceeds cap " + std::to_string(cap) +
                                    "; raise the cap to proceed");
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(space));
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    while (true) {
        out.emplace_back(digits, q);
        int i = n - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == q - 1) {
            digits[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++digits[static_cast<std::size_t>(i)];
    }
    return out;
}

int list_size_at(const Word& z, const Code& c, const ListParams& lp) {
    int count = 0;
    for (const Word& w : c.words())
        if (in_fixed_radius_ball(z, lp.s, lp.t, w)) ++count;
    return count;
}

} // namespace

OracleResult max_indel_code_exact(const CodeParams& p, const OracleLimits& limits) {
    p.validate();
    const auto start = std::chrono::steady_clock::now();
    OracleResult result;
    result.search_space = int_pow(p.q, p.n);

    std::vector<Word> words = all_words(p.q, p.n, limits.max_words);
    if (p.d <= 2) {
        // distinct equal-length words are at distance >= 2
        result.value = result.search_space;
        result.witness = Code(p.q, p.n, std::move(words));
        result.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

    const int v = static_cast<int>(words.size());
    const int lcs_cap = (2 * p.n - p.d) / 2; // d_L >= d  <=>  LCS <= this
    BitGraph g(v);
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            if (lcs(words[static_cast<std::size_t>(i)], words[static_cast<std::size_t>(j)]) <= lcs_cap)
                g.add_edge(i, j);

    const CliqueSearchResult clique = max_clique(g, limits.node_budget);
    if (!clique.completed)
        throw std::runtime_error("max_indel_code_exact: node budget exhausted after " +
                                 std::to_string(clique.nodes) +
                                 " nodes; raise node_budget");
    std::vector<Word> members;
    members.reserve(clique.vertices.size());
    for (int idx : clique.vertices) members.push_back(words[static_cast<std::size_t>(idx)]);

    result.value = static_cast<long>(members.size());
    result.witness = Code(p.q, p.n, std::move(members));
    result.nodes = clique.nodes;
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

ListSizeScan verify_list_bound_everywhere(const Code& c, const ListParams& lp,
                                          const OracleLimits& limits) {
    lp.validate();
    const int m = c.length() - lp.s + lp.t;
    if (m < 0)
        throw std::invalid_argument("verify_list_bound_everywhere: n-s+t negative");
    ListSizeScan scan;
    scan.argmax_center = Word({}, c.alphabet_size());
    for (const Word& z : all_words(c.alphabet_size(), m, limits.max_centers)) {
        const int size = list_size_at(z, c, lp);
        if (size > scan.max_list_size) {
            scan.max_list_size = size;
            scan.argmax_center = z;
        }
    }
    return scan;
}

Code shorten_code(const Code& c, int s) {
    if (s < 0 || s > c.length())
        throw std::invalid_argument("shorten_code: s must be in [0, n]");
    const int keep = c.length() - s;
    std::vector<Word> shortened;
    shortened.reserve(static_cast<std::size_t>(c.size()));
    std::set<Word> seen;
    for (const Word& w : c.words()) {
        Word p(std::vector<int>(w.symbols().begin(), w.symbols().begin() + keep),
               c.alphabet_size());
        if (!seen.insert(p).second)
            throw std::runtime_error("shorten_code: collision at '" + to_line(p) +
                                     "'; the code violates min distance > 2s");
        shortened.push_back(std::move(p));
    }
    return Code(c.alphabet_size(), keep, std::move(shortened));
}

BigRat shortening_exact_mean(const Code& c, int s, int t, const OracleLimits& limits) {
    if (t < 0 || s < 0)
        throw std::invalid_argument("shortening_exact_mean: s, t must be >= 0");
    const Code projected = shorten_code(c, s);
    const int m = c.length() - s + t;
    BigInt total = 0;
    for (const Word& y : all_words(c.alphabet_size(), m, limits.max_centers)) {
        for (const Word& u : deletion_ball(y, t))
            if (projected.contains(u)) ++total;
    }
    return BigRat(total, int_pow(c.alphabet_size(), m));
}

BigRat shortening_closed_form_mean(const Code& c, int s, int t) {
    const int m = c.length() - s + t;
    return BigRat(BigInt(c.size()) * insertion_ball_size(c.alphabet_size(), c.length() - s, t),
                  int_pow(c.alphabet_size(), m));
}

ShorteningSample shortening_experiment(const Code& c, int s, int t, int trials,
                                       std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("shortening_experiment: trials must be >= 1");
    const Code projected = shorten_code(c, s);
    const int m = c.length() - s + t;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> symbol(0, c.alphabet_size() - 1);

    double sum = 0, sum_sq = 0;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<int> symbols(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) symbols[static_cast<std::size_t>(i)] = symbol(rng);
        const Word y(std::move(symbols), c.alphabet_size());
        int count = 0;
        for (const Word& u : deletion_ball(y, t))
            if (projected.contains(u)) ++count;
        sum += count;
        sum_sq += static_cast<double>(count) * count;
    }
    ShorteningSample out;
    out.trials = trials;
    out.seed = seed;
    out.mean = sum / trials;
    if (trials > 1) {
        const double var = (sum_sq - sum * sum / trials) / (trials - 1);
        out.std_error = std::sqrt(std::max(var, 0.0) / trials);
    }
    return out;
}

} // namespace indel
