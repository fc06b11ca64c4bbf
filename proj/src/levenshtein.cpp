#include "indel/levenshtein.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace indel {

namespace {

void require_same_alphabet(const Word& x, const Word& y) {
    if (x.alphabet_size() != y.alphabet_size())
        throw std::invalid_argument("alphabet mismatch: q=" +
                                    std::to_string(x.alphabet_size()) + " vs q=" +
                                    std::to_string(y.alphabet_size()));
}

// One round of "insert every symbol at every position" applied to each word.
std::set<Word> insert_one_symbol(const std::set<Word>& level) {
    std::set<Word> next;
    for (const Word& w : level) {
        const int q = w.alphabet_size();
        for (int pos = 0; pos <= w.size(); ++pos) {
            for (int sym = 0; sym < q; ++sym) {
                std::vector<int> symbols = w.symbols();
                symbols.insert(symbols.begin() + pos, sym);
                next.insert(Word(std::move(symbols), q));
            }
        }
    }
    return next;
}

} // namespace

int lcs(const Word& x, const Word& y) {
    require_same_alphabet(x, y);
    const int nx = x.size(), ny = y.size();
    std::vector<int> prev(static_cast<std::size_t>(ny) + 1, 0);
    std::vector<int> cur(static_cast<std::size_t>(ny) + 1, 0);
    for (int i = nx - 1; i >= 0; --i) {
        for (int j = ny - 1; j >= 0; --j) {
            int best = std::max(prev[j], cur[j + 1]);
            if (x[i] == y[j]) best = std::max(best, 1 + prev[j + 1]);
            cur[j] = best;
        }
        std::swap(prev, cur);
    }
    return prev[0];
}

int levenshtein_distance(const Word& x, const Word& y) {
    return x.size() + y.size() - 2 * lcs(x, y);
}

std::vector<Word> insertion_ball(const Word& x, int t) {
    if (t < 0) throw std::invalid_argument("insertion_ball: t must be >= 0");
    std::set<Word> level{x};
    for (int step = 0; step < t; ++step) level = insert_one_symbol(level);
    return {level.begin(), level.end()};
}

std::vector<Word> deletion_ball(const Word& y, int t) {
    if (t < 0 || t > y.size())
        throw std::invalid_argument("deletion_ball: t must be in [0, |y|]");
    std::set<Word> out;
    // iterate all t-subsets of positions to delete
    std::vector<int> del(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) del[static_cast<std::size_t>(i)] = i;
    const int n = y.size();
    while (true) {
        std::vector<int> symbols;
        symbols.reserve(static_cast<std::size_t>(n - t));
        int k = 0;
        for (int i = 0; i < n; ++i) {
            if (k < t && del[static_cast<std::size_t>(k)] == i) {
                ++k;
            } else {
                symbols.push_back(y[i]);
            }
        }
        out.insert(Word(std::move(symbols), y.alphabet_size()));
        if (t == 0) break;
        // next combination
        int i = t - 1;
        while (i >= 0 && del[static_cast<std::size_t>(i)] == n - t + i) --i;
        if (i < 0) break;
        ++del[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            del[static_cast<std::size_t>(j)] = del[static_cast<std::size_t>(j - 1)] + 1;
    }
    return {out.begin(), out.end()};
}

std::vector<Word> fixed_radius_ball(const Word& z, int s, int t,
                                    const BallEnumLimits& limits) {
    if (s < 0 || t < 0)
        throw std::invalid_argument("fixed_radius_ball: s, t must be >= 0");
    if (t > z.size())
        throw std::invalid_argument("fixed_radius_ball: t exceeds |z|");
    if (z.size() > limits.max_word_length || t > limits.max_deletions)
        throw std::invalid_argument("fixed_radius_ball: enumeration cap exceeded (|z| <= " +
                                    std::to_string(limits.max_word_length) + ", t <= " +
                                    std::to_string(limits.max_deletions) + ")");
    BigInt estimate = 0;
    for (int td = 0; td <= t; ++td)
        estimate += binomial(z.size(), td) *
                    insertion_ball_size(z.alphabet_size(), z.size() - td, s);
    if (estimate > limits.max_words)
        throw std::invalid_argument("fixed_radius_ball: predicted enumeration size " +
                                    estimate.str() + " exceeds cap " +
                                    std::to_string(limits.max_words));

    // Every reachable word arises from some t' deletions followed by s'
    // insertions; enumerate that normal form and de-duplicate.
    std::set<Word> out;
    for (int td = 0; td <= t; ++td) {
        for (const Word& u : deletion_ball(z, td)) {
            std::set<Word> level{u};
            out.insert(u);
            for (int step = 0; step < s; ++step) {
                level = insert_one_symbol(level);
                out.insert(level.begin(), level.end());
            }
        }
    }
    return {out.begin(), out.end()};
}

bool in_fixed_radius_ball(const Word& z, int s, int t, const Word& w) {
    require_same_alphabet(z, w);
    if (s < 0 || t < 0)
        throw std::invalid_argument("in_fixed_radius_ball: s, t must be >= 0");
    const int diff = w.size() - z.size(); // s' - t' for any edit split
    const int hi = std::min({t, s - diff, z.size()});
    const int lo = std::max(0, -diff);
    if (hi < lo) return false;
    return lcs(z, w) >= z.size() - hi;
}

BigInt insertion_ball_size(int q, int n, int t) {
    if (q < 1) throw std::invalid_argument("insertion_ball_size: q must be >= 1");
    if (n < 0 || t < 0)
        throw std::invalid_argument("insertion_ball_size: n, t must be >= 0");
    BigInt total = 0;
    for (int i = 0; i <= t; ++i)
        total += binomial(n + t, i) * int_pow(q - 1, i);
    return total;
}

int min_levenshtein_distance(const Code& c) {
    if (c.size() < 2) return k_infinite_distance;
    int best = k_infinite_distance;
    const auto& ws = c.words();
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j)
            best = std::min(best, levenshtein_distance(ws[i], ws[j]));
    return best;
}

std::vector<int> lcs_index_set(const Word& z, const Word& c) {
    require_same_alphabet(z, c);
    const int nz = z.size(), nc = c.size();
    // suffix table: L[i][j] = LCS(z[i:], c[j:])
    std::vector<std::vector<int>> L(static_cast<std::size_t>(nz) + 1,
                                    std::vector<int>(static_cast<std::size_t>(nc) + 1, 0));
    for (int i = nz - 1; i >= 0; --i) {
        for (int j = nc - 1; j >= 0; --j) {
            int best = std::max(L[i + 1][j], L[i][j + 1]);
            if (z[i] == c[j]) best = std::max(best, 1 + L[i + 1][j + 1]);
            L[i][j] = best;
        }
    }
    // Greedy walk: take index i whenever some match position preserves the
    // optimum; matching at the earliest such position never loses options.
    std::vector<int> out;
    int i = 0, j = 0;
    while (i < nz && j < nc && L[i][j] > 0) {
        bool taken = false;
        for (int jp = j; jp < nc; ++jp) {
            if (c[jp] == z[i] && 1 + L[i + 1][jp + 1] == L[i][j]) {
                out.push_back(i);
                j = jp + 1;
                taken = true;
                break;
            }
        }
        ++i;
        (void)taken; // if i was not takable, L[i+1][j] == L[i][j]
    }
    return out;
}

} // namespace indel
