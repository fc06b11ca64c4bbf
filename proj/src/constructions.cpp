#include "indel/constructions.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "indel/levenshtein.hpp"

namespace indel {

bool VerificationReport::all_passed() const {
    for (const CheckResult& c : checks)
        if (!c.passed) return false;
    return true;
}

TightnessInstance build_tightness_instance(const CodeParams& p, const ListParams& lp,
                                           const SearchLimits& limits) {
    p.validate();
    lp.validate();
    if (2 * lp.s > p.d - 1)
        throw std::invalid_argument("build_tightness_instance: requires s <= floor((d-1)/2)");
    const int m = p.n - lp.s + lp.t; // length of z
    const int d_inner = p.d - 2 * lp.s;
    if (m < 1 || m > 63)
        throw std::invalid_argument("build_tightness_instance: n-s+t out of range");

    const CWSearchResult search = max_constant_weight_exact({m, d_inner, lp.t}, limits);
    if (!search.completed)
        throw std::runtime_error("build_tightness_instance: constant-weight search "
                                 "budget exhausted");
    const int family_size = static_cast<int>(search.witness.supports.size());

    const BigInt required = lp.s == 0 ? BigInt(m) : BigInt(m) + family_size;
    if (p.q < required)
        throw std::invalid_argument("build_tightness_instance: alphabet too small, need q >= " +
                                    required.str());

    // weight-(n-s) family = complement of the maximum weight-t family
    const std::uint64_t full = (m == 63) ? ~0ull >> 1 : ((1ull << m) - 1);
    std::vector<std::uint64_t> supports;
    supports.reserve(search.witness.supports.size());
    for (std::uint64_t mask : search.witness.supports) supports.push_back(full ^ mask);
    std::sort(supports.begin(), supports.end());
    SupportFamily family{m, p.n - lp.s, std::move(supports)};
    family.validate();

    std::vector<int> z_symbols(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) z_symbols[static_cast<std::size_t>(i)] = i;
    Word center(std::move(z_symbols), p.q);

    std::vector<int> markers;
    std::vector<Word> words;
    for (int k = 0; k < family_size; ++k) {
        const std::uint64_t mask = family.supports[static_cast<std::size_t>(k)];
        std::vector<int> symbols;
        symbols.reserve(static_cast<std::size_t>(p.n));
        const int marker = m + k; // distinct from every symbol of z
        for (int rep = 0; rep < lp.s; ++rep) symbols.push_back(marker);
        for (int i = 0; i < m; ++i)
            if (mask & (1ull << i)) symbols.push_back(center[i]);
        if (lp.s > 0) markers.push_back(marker);
        words.emplace_back(std::move(symbols), p.q);
    }

    return TightnessInstance{p, lp, std::move(center), Code(p.q, p.n, std::move(words)),
                             std::move(family), std::move(markers)};
}

VerificationReport verify_tightness_instance(const TightnessInstance& inst,
                                             const SearchLimits& limits) {
    const CodeParams& p = inst.params;
    const ListParams& lp = inst.list_params;
    VerificationReport report;

    {
        const int md = min_levenshtein_distance(inst.code);
        CheckResult c{"min_levenshtein_distance", md >= p.d, ""};
        c.detail = (md == k_infinite_distance ? std::string("infinite")
                                              : std::to_string(md)) +
                   " vs required " + std::to_string(p.d);
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"ball_membership", true, "all codewords in B(z,s,t)"};
        for (const Word& w : inst.code.words()) {
            if (!in_fixed_radius_ball(inst.center, lp.s, lp.t, w)) {
                c.passed = false;
                c.detail = "word '" + to_line(w) + "' outside B(z," +
                           std::to_string(lp.s) + "," + std::to_string(lp.t) + ")";
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }
    {
        const CWQuery query{p.n - lp.s + lp.t, p.d - 2 * lp.s, lp.t};
        const CWSearchResult r = max_constant_weight_exact(query, limits);
        CheckResult c{"list_size_equals_max", false, ""};
        if (!r.completed) {
            c.detail = "recomputation budget exhausted";
        } else {
            c.passed = BigInt(inst.code.size()) == r.best_size;
            c.detail = "|C| = " + std::to_string(inst.code.size()) +
                       ", A(n-s+t,d-2s,t) = " + r.best_size.str();
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

SupportFamily encode_list_to_constant_weight(const Word& z, const Code& list,
                                             int s, int t) {
    if (s < 0 || t < 0)
        throw std::invalid_argument("encode_list_to_constant_weight: s, t must be >= 0");
    const int n = list.length();
    const int m = n - s + t;
    if (z.size() != m)
        throw std::invalid_argument("encode_list_to_constant_weight: |z| must equal n-s+t");
    if (z.alphabet_size() != list.alphabet_size())
        throw std::invalid_argument("encode_list_to_constant_weight: alphabet mismatch");
    if (m < 0 || m > 63 || n - s < 0)
        throw std::invalid_argument("encode_list_to_constant_weight: parameters out of range");

    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> supports;
    for (const Word& c : list.words()) {
        if (!in_fixed_radius_ball(z, s, t, c))
            throw std::invalid_argument("encode_list_to_constant_weight: word '" +
                                        to_line(c) + "' is not in B(z,s,t)");
        const std::vector<int> idx = lcs_index_set(z, c);
        if (static_cast<int>(idx.size()) < n - s)
            throw std::invalid_argument("encode_list_to_constant_weight: word '" +
                                        to_line(c) + "' shares no length-(n-s) "
                                        "subsequence with z");
        std::uint64_t mask = 0;
        for (int k = 0; k < n - s; ++k) // smallest-index trim
            mask |= 1ull << idx[static_cast<std::size_t>(k)];
        if (!seen.insert(mask).second)
            throw std::invalid_argument("encode_list_to_constant_weight: support collision "
                                        "for word '" + to_line(c) +
                                        "'; list violates min distance > 2s");
        supports.push_back(mask);
    }
    std::sort(supports.begin(), supports.end());
    SupportFamily fam{m, n - s, std::move(supports)};
    fam.validate();
    return fam;
}

} // namespace indel
