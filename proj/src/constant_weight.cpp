#include "indel/constant_weight.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "indel/max_clique.hpp"
#include "indel/words.hpp"

namespace indel {

namespace {

void validate_query(const CWQuery& q) {
    if (q.n < 1) throw std::invalid_argument("CWQuery: n must be >= 1");
    if (q.w < 0 || q.w > q.n)
        throw std::invalid_argument("CWQuery: w must be in [0, n]");
    if (q.d < 0) throw std::invalid_argument("CWQuery: d must be >= 0");
}

int normalize_even(int d) { return d + (d & 1); }

std::uint64_t full_mask(int n) { return (n == 64) ? ~0ull : ((1ull << n) - 1); }

// All w-subsets of {1,...,n} as bitmasks in ascending numeric (lexicographic
// subset) order, via Gosper's hack.
std::vector<std::uint64_t> all_weight_subsets(int n, int w) {
    std::vector<std::uint64_t> out;
    if (w < 0 || w > n) return out;
    if (w == 0) {
        out.push_back(0);
        return out;
    }
    std::uint64_t v = (1ull << w) - 1;
    const std::uint64_t limit = 1ull << n;
    while (v < limit) {
        out.push_back(v);
        const std::uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

// Analytic-only part of the aggregated upper bound (no search), used both by
// cw_upper_bound and as fallback when the exact search runs out of budget.
BigInt analytic_upper(const CWQuery& q) {
    const int dn = normalize_even(q.d);
    const int wn = std::min(q.w, q.n - q.w);
    BigInt best = binomial(q.n, q.w);
    if (dn > 2 * wn) best = std::min(best, BigInt(1));
    if (auto j = johnson_bound_cw({q.n, dn, q.w}))
        best = std::min(best, j->value);
    return best;
}

SupportFamily single_support_family(int n, int w) {
    SupportFamily fam;
    fam.block_length = n;
    fam.weight = w;
    fam.supports = {w == 0 ? 0ull : ((1ull << w) - 1)};
    return fam;
}

} // namespace

SupportFamily SupportFamily::from_index_lists(int n, int w,
                                              const std::vector<std::vector<int>>& one_based) {
    SupportFamily fam;
    fam.block_length = n;
    fam.weight = w;
    for (const auto& idx : one_based) {
        std::uint64_t mask = 0;
        for (int i : idx) {
            if (i < 1 || i > n)
                throw std::invalid_argument("SupportFamily: index out of range");
            mask |= 1ull << (i - 1);
        }
        fam.supports.push_back(mask);
    }
    std::sort(fam.supports.begin(), fam.supports.end());
    fam.validate();
    return fam;
}

std::vector<std::vector<int>> SupportFamily::index_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(supports.size());
    for (std::uint64_t mask : supports) {
        std::vector<int> idx;
        for (int i = 0; i < block_length; ++i)
            if (mask & (1ull << i)) idx.push_back(i + 1);
        out.push_back(std::move(idx));
    }
    return out;
}

void SupportFamily::validate() const {
    if (block_length < 0 || block_length > 63)
        throw std::invalid_argument("SupportFamily: block length must be in [0, 63]");
    if (weight < 0 || weight > block_length)
        throw std::invalid_argument("SupportFamily: weight must be in [0, n]");
    std::uint64_t seen_union = 0;
    for (std::size_t k = 0; k < supports.size(); ++k) {
        const std::uint64_t mask = supports[k];
        if (mask & ~full_mask(block_length))
            throw std::invalid_argument("SupportFamily: support exceeds block length");
        if (std::popcount(mask) != weight)
            throw std::invalid_argument("SupportFamily: member of wrong weight");
        if (k > 0 && supports[k - 1] >= mask)
            throw std::invalid_argument("SupportFamily: supports must be sorted and distinct");
        seen_union |= mask;
    }
}

int hamming_distance_supports(std::uint64_t e, std::uint64_t f) {
    const int we = std::popcount(e), wf = std::popcount(f);
    if (we != wf)
        throw std::invalid_argument("hamming_distance_supports: unequal cardinalities");
    return 2 * we - 2 * std::popcount(e & f);
}

int min_distance(const SupportFamily& fam) {
    if (fam.supports.size() < 2) return k_infinite_distance;
    int best = k_infinite_distance;
    for (std::size_t i = 0; i < fam.supports.size(); ++i)
        for (std::size_t j = i + 1; j < fam.supports.size(); ++j)
            best = std::min(best,
                            hamming_distance_supports(fam.supports[i], fam.supports[j]));
    return best;
}

void write_family(std::ostream& os, const SupportFamily& fam) {
    os << "n=" << fam.block_length << " w=" << fam.weight << '\n';
    for (const auto& idx : fam.index_lists()) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (k) os << ' ';
            os << idx[k];
        }
        os << '\n';
    }
}

SupportFamily read_family(std::istream& is) {
    std::string header;
    if (!std::getline(is, header))
        throw std::invalid_argument("family file: missing header");
    int n = -1, w = -1;
    if (std::sscanf(header.c_str(), "n=%d w=%d", &n, &w) != 2)
        throw std::invalid_argument("family file: bad header '" + header + "'");
    std::vector<std::vector<int>> lists;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<int> idx;
        int v;
        while (ls >> v) idx.push_back(v);
        lists.push_back(std::move(idx));
    }
    return SupportFamily::from_index_lists(n, w, lists);
}

std::string family_to_text(const SupportFamily& fam) {
    std::ostringstream os;
    write_family(os, fam);
    return os.str();
}

SupportFamily family_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_family(is);
}

std::string to_string(Exactness e) {
    return e == Exactness::exact ? "exact" : "upper_bound";
}

std::string to_string(CWMethod m) {
    switch (m) {
        case CWMethod::search: return "search";
        case CWMethod::johnson: return "johnson";
        case CWMethod::trivial: return "trivial";
        case CWMethod::complement: return "complement";
    }
    return "?";
}

CWAnswer CWSearchResult::exact_answer(const CWQuery& normalized) const {
    if (!completed)
        throw std::logic_error("exact_answer: search did not complete");
    return CWAnswer{normalized, best_size, Exactness::exact, method, witness};
}

CWSearchResult max_constant_weight_exact(const CWQuery& query,
                                         const SearchLimits& limits) {
    validate_query(query);
    const int dn = normalize_even(query.d);
    CWSearchResult result;
    result.completed = true;

    // trivial regimes, answered exactly regardless of the search caps
    if (query.n <= 63 && (query.w == 0 || query.w == query.n || dn > 2 * query.w)) {
        // w in {0, n}: one word exists; d > 2w: two weight-w words are too close
        result.best_size = 1;
        result.witness = single_support_family(query.n, query.w);
        result.upper_bound = 1;
        result.method = CWMethod::trivial;
        return result;
    }

    if (query.n > limits.max_block_length || query.n > 63)
        throw SearchCapError("max_constant_weight_exact: n=" +
                             std::to_string(query.n) + " exceeds cap " +
                             std::to_string(std::min(limits.max_block_length, 63)));
    const BigInt vertex_count = binomial(query.n, query.w);
    if (vertex_count > limits.max_vertices)
        throw SearchCapError("max_constant_weight_exact: C(n,w)=" + vertex_count.str() +
                             " exceeds vertex cap " + std::to_string(limits.max_vertices));

    if (dn <= 2) {
        // distinct constant-weight words differ in at least two positions
        result.best_size = vertex_count;
        result.witness =
            SupportFamily{query.n, query.w, all_weight_subsets(query.n, query.w)};
        result.upper_bound = vertex_count;
        result.method = CWMethod::trivial;
        return result;
    }

    const auto verts = all_weight_subsets(query.n, query.w);
    const int theta = query.w - dn / 2; // compatible iff |E ∩ F| <= theta
    const std::uint64_t v0 = verts[0];  // {1, ..., w}

    // search inside the neighborhood of the fixed first codeword
    std::vector<std::uint64_t> nbr;
    for (std::size_t k = 1; k < verts.size(); ++k)
        if (std::popcount(verts[k] & v0) <= theta) nbr.push_back(verts[k]);

    BitGraph g(static_cast<int>(nbr.size()));
    for (std::size_t i = 0; i < nbr.size(); ++i)
        for (std::size_t j = i + 1; j < nbr.size(); ++j)
            if (std::popcount(nbr[i] & nbr[j]) <= theta)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));

    const CliqueSearchResult clique = max_clique(g, limits.node_budget);
    std::vector<std::uint64_t> members{v0};
    for (int idx : clique.vertices) members.push_back(nbr[static_cast<std::size_t>(idx)]);
    std::sort(members.begin(), members.end());

    result.completed = clique.completed;
    result.best_size = static_cast<long>(members.size());
    result.witness = SupportFamily{query.n, query.w, std::move(members)};
    result.upper_bound = clique.completed ? result.best_size
                                          : analytic_upper({query.n, dn, query.w});
    result.method = CWMethod::search;
    result.nodes = clique.nodes;
    return result;
}

std::optional<CWAnswer> johnson_bound_cw(const CWQuery& query) {
    validate_query(query);
    const long long dn = static_cast<long long>(query.d) * query.n;
    const long long cross = 2ll * query.w * (query.n - query.w);
    if (dn <= cross) return std::nullopt;
    CWAnswer a;
    a.query = query;
    a.value = BigInt(dn) / BigInt(dn - cross); // exact rational, floored at the end
    a.exactness = Exactness::upper_bound;
    a.method = CWMethod::johnson;
    return a;
}

CWAnswer cw_upper_bound(const CWQuery& query, const SearchLimits& limits) {
    validate_query(query);
    const int dn = normalize_even(query.d);
    const int wn = std::min(query.w, query.n - query.w);
    const CWQuery normalized{query.n, dn, query.w};

    std::vector<CWAnswer> candidates;

    try {
        const CWSearchResult r = max_constant_weight_exact(query, limits);
        if (r.completed) {
            candidates.push_back(r.exact_answer(normalized));
        } else {
            candidates.push_back(
                CWAnswer{normalized, r.upper_bound, Exactness::upper_bound,
                         CWMethod::search, std::nullopt});
        }
    } catch (const SearchCapError&) {
        // out of reach for the exact search; fall through to analytic bounds
    }
    if (dn > 2 * wn) {
        // exact: a single word always exists, and two would be too close
        const bool witnessable = query.n <= 63;
        candidates.push_back(CWAnswer{
            normalized, 1, witnessable ? Exactness::exact : Exactness::upper_bound,
            wn == query.w ? CWMethod::trivial : CWMethod::complement,
            witnessable ? std::optional(single_support_family(query.n, query.w))
                        : std::nullopt});
    }
    if (auto j = johnson_bound_cw({query.n, dn, query.w}))
        candidates.push_back(*j);
    candidates.push_back(CWAnswer{normalized, binomial(query.n, query.w),
                                  Exactness::upper_bound, CWMethod::trivial,
                                  std::nullopt});

    const CWAnswer* best = &candidates.front();
    for (const CWAnswer& c : candidates) {
        if (c.value < best->value ||
            (c.value == best->value && best->exactness == Exactness::upper_bound &&
             c.exactness == Exactness::exact))
            best = &c;
    }
    return *best;
}

} // namespace indel
