#include "indel/selfcheck.hpp"

#include <string>

#include "indel/bounds.hpp"
#include "indel/constructions.hpp"
#include "indel/levenshtein.hpp"
#include "indel/oracle.hpp"

namespace indel {

namespace {

// unfloored Johnson value d*n / (d*n - 2w(n-w)) when positive
std::optional<BigRat> johnson_rational(long long n, long long d, long long w) {
    const long long num = d * n;
    const long long den = num - 2 * w * (n - w);
    if (den <= 0) return std::nullopt;
    return BigRat(BigInt(num), BigInt(den));
}

CheckOutcome check_johnson_instantiation(int n_max) {
    long long checked = 0;
    for (int n = 1; n <= n_max; ++n) {
        for (int d = 1; d <= 2 * n; ++d) {
            for (int s = 0; 2 * s <= d - 1 && s <= n; ++s) {
                for (int t = 0; t <= n; ++t) {
                    const auto instantiated =
                        johnson_rational(n - s + t, d - 2 * s, t);
                    const BoundValue hy = hy_list_bound({2, n, d}, {s, t});
                    if (instantiated.has_value() != hy.applicable)
                        return {"johnson_instantiation_recovers_list_bound", false,
                                "applicability mismatch at n=" + std::to_string(n) +
                                    " d=" + std::to_string(d) + " s=" + std::to_string(s) +
                                    " t=" + std::to_string(t)};
                    if (hy.applicable && *instantiated != *hy.value)
                        return {"johnson_instantiation_recovers_list_bound", false,
                                "value mismatch at n=" + std::to_string(n) +
                                    " d=" + std::to_string(d) + " s=" + std::to_string(s) +
                                    " t=" + std::to_string(t)};
                    ++checked;
                }
            }
        }
    }
    return {"johnson_instantiation_recovers_list_bound", true,
            std::to_string(checked) + " parameter tuples"};
}

CheckOutcome check_singleton_sphere_recovery(int n_max, int q_max) {
    long long checked = 0;
    for (int q = 2; q <= q_max; ++q) {
        for (int n = 1; n <= n_max; ++n) {
            for (int d = 1; d <= 2 * n; ++d) {
                const CodeParams p{q, n, d};
                const int half = (d - 1) / 2;
                const BoundValue singleton = shortened_sphere_packing(p, {half, 0});
                const BigRat expected_singleton(int_pow(q, n - (d + 1) / 2 + 1));
                if (!singleton.applicable || *singleton.value != expected_singleton)
                    return {"singleton_sphere_packing_recovery", false,
                            "singleton mismatch at q=" + std::to_string(q) +
                                " n=" + std::to_string(n) + " d=" + std::to_string(d)};
                const BoundValue sphere = shortened_sphere_packing(p, {0, half});
                const BigRat expected_sphere(int_pow(q, n + half),
                                             insertion_ball_size(q, n, half));
                if (!sphere.applicable || *sphere.value != expected_sphere)
                    return {"singleton_sphere_packing_recovery", false,
                            "sphere-packing mismatch at q=" + std::to_string(q) +
                                " n=" + std::to_string(n) + " d=" + std::to_string(d)};
                // the constant-weight factor is 1 at both corners
                const BoundValue elias_singleton = main_elias_bound(p, {half, 0}, CWMode::exact);
                const BoundValue elias_sphere = main_elias_bound(p, {0, half}, CWMode::exact);
                if (*elias_singleton.value != expected_singleton ||
                    *elias_sphere.value != expected_sphere)
                    return {"singleton_sphere_packing_recovery", false,
                            "elias corner mismatch at q=" + std::to_string(q) +
                                " n=" + std::to_string(n) + " d=" + std::to_string(d)};
                ++checked;
            }
        }
    }
    return {"singleton_sphere_packing_recovery", true,
            std::to_string(checked) + " (q, n, d) triples"};
}

CheckOutcome check_list_bound_dominance(int n_max) {
    long long checked = 0;
    for (int n = 1; n <= n_max; ++n) {
        for (int d = 1; d <= 2 * n; ++d) {
            for (int s = 0; 2 * s <= d - 1; ++s) {
                for (int t = 0; t <= std::min(4, n); ++t) {
                    const CodeParams p{2, n, d};
                    const ListParams lp{s, t};
                    const BoundValue hy = hy_list_bound(p, lp);
                    if (!hy.applicable) continue;
                    const BoundValue exact = main_johnson_list_bound(p, lp, CWMode::exact);
                    if (*exact.value > *hy.value)
                        return {"list_bound_dominance", false,
                                "exact bound above Johnson-type value at n=" +
                                    std::to_string(n) + " d=" + std::to_string(d) +
                                    " s=" + std::to_string(s) + " t=" + std::to_string(t)};
                    ++checked;
                }
            }
        }
    }
    return {"list_bound_dominance", true, std::to_string(checked) + " applicable tuples"};
}

CheckOutcome check_tightness_instances() {
    struct Spec {
        CodeParams p;
        ListParams lp;
    };
    const Spec instances[] = {
        {{5, 3, 4}, {0, 2}},
        {{8, 4, 4}, {1, 1}},
        {{6, 4, 6}, {0, 2}},
    };
    for (const Spec& spec : instances) {
        const TightnessInstance inst = build_tightness_instance(spec.p, spec.lp);
        const VerificationReport report = verify_tightness_instance(inst);
        if (!report.all_passed()) {
            std::string detail = "q=" + std::to_string(spec.p.q) + ": ";
            for (const CheckResult& c : report.checks)
                if (!c.passed) detail += c.name + " (" + c.detail + ") ";
            return {"tightness_instances", false, detail};
        }
    }
    return {"tightness_instances", true, "3 instances built and verified"};
}

CheckOutcome check_averaging_identity() {
    long long checked = 0;
    for (int q = 2; q <= 3; ++q) {
        for (int n = 2; n <= 4; ++n) {
            const OracleResult best = max_indel_code_exact({q, n, 3});
            for (int s = 0; s <= 1; ++s) {
                if (min_levenshtein_distance(best.witness) <= 2 * s) continue;
                for (int t = 0; t <= 2; ++t) {
                    if (shortening_exact_mean(best.witness, s, t) !=
                        shortening_closed_form_mean(best.witness, s, t))
                        return {"averaging_identity", false,
                                "mismatch at q=" + std::to_string(q) +
                                    " n=" + std::to_string(n) + " s=" + std::to_string(s) +
                                    " t=" + std::to_string(t)};
                    ++checked;
                }
            }
        }
    }
    return {"averaging_identity", true, std::to_string(checked) + " (C, s, t) instances"};
}

CheckOutcome check_oracle_soundness(CheckLevel level) {
    struct Range {
        int q, n;
    };
    std::vector<Range> ranges{{2, 2}, {2, 3}};
    if (level == CheckLevel::full) {
        ranges.push_back({2, 4});
        ranges.push_back({2, 5});
        ranges.push_back({3, 2});
        ranges.push_back({3, 3});
        ranges.push_back({3, 4});
    }
    long long checked = 0;
    for (const Range& r : ranges) {
        for (int d = 2; d <= 2 * r.n; ++d) {
            const CodeParams p{r.q, r.n, d};
            const BigRat oracle(max_indel_code_exact(p).value);
            for (int s = 0; 2 * s <= d - 1 && s <= 2; ++s) {
                for (int t = 0; t <= 2; ++t) {
                    for (const BoundValue& bv :
                         {main_elias_bound(p, {s, t}, CWMode::exact),
                          s == 0 ? yasunaga_elias_bound(p, t) : BoundValue{},
                          shortened_sphere_packing(p, {s, t})}) {
                        if (bv.applicable && oracle > *bv.value)
                            return {"oracle_soundness", false,
                                    "oracle exceeds " + bv.source + " at q=" +
                                        std::to_string(r.q) + " n=" + std::to_string(r.n) +
                                        " d=" + std::to_string(d) + " s=" + std::to_string(s) +
                                        " t=" + std::to_string(t)};
                        ++checked;
                    }
                }
            }
        }
    }
    return {"oracle_soundness", true, std::to_string(checked) + " bound comparisons"};
}

} // namespace

std::vector<CheckOutcome> run_selfchecks(CheckLevel level) {
    const bool full = level == CheckLevel::full;
    std::vector<CheckOutcome> out;
    out.push_back(check_johnson_instantiation(full ? 14 : 8));
    out.push_back(check_singleton_sphere_recovery(full ? 10 : 6, full ? 5 : 3));
    out.push_back(check_list_bound_dominance(full ? 10 : 6));
    out.push_back(check_tightness_instances());
    out.push_back(check_averaging_identity());
    out.push_back(check_oracle_soundness(level));
    return out;
}

} // namespace indel
