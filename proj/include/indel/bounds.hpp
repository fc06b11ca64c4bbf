#pragma once

#include <optional>
#include <string>

#include "indel/constant_weight.hpp"
#include "indel/numbers.hpp"

namespace indel {

/// Parameters of a q-ary length-n code with minimum Levenshtein distance d.
struct CodeParams {
    int q = 2;
    int n = 1;
    int d = 1;
    void validate() const; ///< q >= 2, n >= 1, 1 <= d <= 2n
};

/// Insertion/deletion counts for the list-decoding ball.
struct ListParams {
    int s = 0;
    int t = 0;
    void validate() const; ///< s, t >= 0
};

/// A computed bound. Failing the theorem hypothesis yields an inapplicable
/// value, never an exception, so grid sweeps skip instead of aborting.
struct BoundValue {
    std::string source;
    bool applicable = false;
    std::optional<BigRat> value; ///< absent when not applicable
    Exactness exactness = Exactness::exact;
};

enum class CWMode { exact, upper };

/// Johnson-type list-size bound: applicable when
/// d > 2s + 2t(n-s)/(n-s+t) (equivalently, the denominator below is
/// positive); value (n-s+t)(d-2s) / ((n-s+t)(d-2s) - 2t(n-s)).
BoundValue hy_list_bound(const CodeParams& p, const ListParams& lp);

/// Constant-weight list-size bound A(n-s+t, d-2s, t), applicable when
/// s <= floor((d-1)/2). In exact mode the value comes from the exact search
/// (an error suggests upper mode when the query is out of cap); in upper mode
/// from cw_upper_bound. Exactness propagates from the constant-weight answer.
BoundValue main_johnson_list_bound(const CodeParams& p, const ListParams& lp,
                                   CWMode mode, const SearchLimits& limits = {});

/// Elias-type cardinality bound:
/// ((n+t)d / ((n+t)d - 2nt)) * q^{n+t} / I_q(n,t), applicable when d < 2n and
/// t < nd/(2n-d) (checked by cross-multiplication; exactly the positivity of
/// the denominator).
BoundValue yasunaga_elias_bound(const CodeParams& p, int t);

/// Cardinality bound A(n-s+t, d-2s, t) * q^{n-s+t} / I_q(n-s, t), applicable
/// when s <= floor((d-1)/2).
BoundValue main_elias_bound(const CodeParams& p, const ListParams& lp,
                            CWMode mode, const SearchLimits& limits = {});

/// Cardinality bound q^{n-s+t} / I_q(n-s, t), applicable when
/// s + t <= floor((d-1)/2). Recovers the Singleton bound at
/// (s, t) = (floor((d-1)/2), 0) and the sphere-packing bound at
/// (s, t) = (0, floor((d-1)/2)).
BoundValue shortened_sphere_packing(const CodeParams& p, const ListParams& lp);

struct BestBoundResult {
    BoundValue bound;
    ListParams argmin;
};

/// Minimum over all applicable cardinality bounds for s in [0, s_max] and
/// t in [0, t_max]; argmin ties break to the lexicographically smallest
/// (s, t). When nothing applies, returns the trivial bound q^n. Exact-mode
/// candidates whose constant-weight query exceeds the search caps are
/// skipped.
BestBoundResult best_bound(const CodeParams& p, int s_max, int t_max,
                           CWMode mode, const SearchLimits& limits = {});

} // namespace indel
