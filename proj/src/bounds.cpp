#include "indel/bounds.hpp"

#include <stdexcept>

#include "indel/levenshtein.hpp"

namespace indel {

void CodeParams::validate() const {
    if (q < 2) throw std::invalid_argument("CodeParams: q must be >= 2");
    if (n < 1) throw std::invalid_argument("CodeParams: n must be >= 1");
    if (d < 1 || d > 2 * n)
        throw std::invalid_argument("CodeParams: d must satisfy 1 <= d <= 2n");
}

void ListParams::validate() const {
    if (s < 0 || t < 0) throw std::invalid_argument("ListParams: s, t must be >= 0");
}

namespace {

BoundValue not_applicable(std::string source) {
    return BoundValue{std::move(source), false, std::nullopt, Exactness::exact};
}

// A(n-s+t, d-2s, t) factor shared by the list and cardinality bounds.
// Returns value plus exactness; throws in exact mode when out of reach.
std::pair<BigInt, Exactness> constant_weight_factor(const CodeParams& p,
                                                    const ListParams& lp,
                                                    CWMode mode,
                                                    const SearchLimits& limits) {
    const CWQuery query{p.n - lp.s + lp.t, p.d - 2 * lp.s, lp.t};
    if (mode == CWMode::exact) {
        CWSearchResult r;
        try {
            r = max_constant_weight_exact(query, limits);
        } catch (const SearchCapError& e) {
            throw std::invalid_argument(std::string("exact mode: ") + e.what() +
                                        "; use upper mode");
        }
        if (!r.completed)
            throw std::runtime_error(
                "exact mode: search budget exhausted for A(" +
                std::to_string(query.n) + "," + std::to_string(query.d) + "," +
                std::to_string(query.w) + "); use upper mode or raise the budget");
        return {r.best_size, Exactness::exact};
    }
    const CWAnswer a = cw_upper_bound(query, limits);
    return {a.value, a.exactness};
}

} // namespace

BoundValue hy_list_bound(const CodeParams& p, const ListParams& lp) {
    p.validate();
    lp.validate();
    BoundValue out = not_applicable("hy_list_bound");
    const long long n = p.n, d = p.d, s = lp.s, t = lp.t;
    if (s > n) return out; // theorem hypothesis
    const long long m = n - s + t;
    if (m <= 0) return out;
    const long long num = m * (d - 2 * s);
    const long long den = num - 2 * t * (n - s);
    if (den <= 0) return out; // positivity of the denominator == the hypothesis
    out.applicable = true;
    out.value = BigRat(BigInt(num), BigInt(den));
    out.exactness = Exactness::exact;
    return out;
}

BoundValue main_johnson_list_bound(const CodeParams& p, const ListParams& lp,
                                   CWMode mode, const SearchLimits& limits) {
    p.validate();
    lp.validate();
    BoundValue out = not_applicable("main_johnson_list_bound");
    if (2 * lp.s > p.d - 1) return out; // s <= floor((d-1)/2)
    const auto [value, exactness] = constant_weight_factor(p, lp, mode, limits);
    out.applicable = true;
    out.value = BigRat(value);
    out.exactness = exactness;
    return out;
}

BoundValue yasunaga_elias_bound(const CodeParams& p, int t) {
    p.validate();
    if (t < 0) throw std::invalid_argument("yasunaga_elias_bound: t must be >= 0");
    BoundValue out = not_applicable("yasunaga_elias_bound");
    const long long n = p.n, d = p.d;
    if (d >= 2 * n) return out;
    if (!(static_cast<long long>(t) * (2 * n - d) < n * d)) return out;
    const BigInt fraction_num = BigInt(n + t) * d;
    const BigInt fraction_den = fraction_num - BigInt(2) * n * t; // > 0 iff hypothesis
    out.applicable = true;
    out.value = BigRat(fraction_num * int_pow(p.q, p.n + t),
                       fraction_den * insertion_ball_size(p.q, p.n, t));
    out.exactness = Exactness::exact;
    return out;
}

BoundValue main_elias_bound(const CodeParams& p, const ListParams& lp,
                            CWMode mode, const SearchLimits& limits) {
    p.validate();
    lp.validate();
    BoundValue out = not_applicable("main_elias_bound");
    if (2 * lp.s > p.d - 1) return out;
    const auto [value, exactness] = constant_weight_factor(p, lp, mode, limits);
    out.applicable = true;
    out.value = BigRat(value * int_pow(p.q, p.n - lp.s + lp.t),
                       insertion_ball_size(p.q, p.n - lp.s, lp.t));
    out.exactness = exactness;
    return out;
}

BoundValue shortened_sphere_packing(const CodeParams& p, const ListParams& lp) {
    p.validate();
    lp.validate();
    BoundValue out = not_applicable("shortened_sphere_packing");
    if (2 * (lp.s + lp.t) > p.d - 1) return out;
    out.applicable = true;
    out.value = BigRat(int_pow(p.q, p.n - lp.s + lp.t),
                       insertion_ball_size(p.q, p.n - lp.s, lp.t));
    out.exactness = Exactness::exact;
    return out;
}

BestBoundResult best_bound(const CodeParams& p, int s_max, int t_max,
                           CWMode mode, const SearchLimits& limits) {
    p.validate();
    if (s_max < 0 || t_max < 0)
        throw std::invalid_argument("best_bound: ranges must be >= 0");
    BestBoundResult result;
    bool have = false;
    auto consider = [&](const BoundValue& cand, const ListParams& at) {
        if (!cand.applicable) return;
        if (!have || *cand.value < *result.bound.value) {
            result.bound = cand;
            result.argmin = at;
            have = true;
        }
    };
    for (int s = 0; s <= s_max; ++s) {
        for (int t = 0; t <= t_max; ++t) {
            const ListParams lp{s, t};
            try {
                consider(main_elias_bound(p, lp, mode, limits), lp);
            } catch (const std::invalid_argument&) {
                // exact mode out of search caps for this (s, t): skip
            } catch (const std::runtime_error&) {
                // budget exhausted: skip
            }
            if (s == 0) consider(yasunaga_elias_bound(p, t), lp);
            consider(shortened_sphere_packing(p, lp), lp);
        }
    }
    if (!have) {
        result.bound.source = "trivial_qn";
        result.bound.applicable = true;
        result.bound.value = BigRat(int_pow(p.q, p.n));
        result.bound.exactness = Exactness::exact;
        result.argmin = ListParams{0, 0};
    }
    return result;
}

} // namespace indel
