#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "indel/numbers.hpp"

namespace indel {

/// A binary constant-weight code given by the supports of its codewords:
/// a family of w-subsets of {1, ..., n}, stored as sorted bitmasks (bit i
/// set means index i+1 belongs to the support). Requires n <= 63.
struct SupportFamily {
    int block_length = 0; ///< n
    int weight = 0;       ///< w
    std::vector<std::uint64_t> supports;

    static SupportFamily from_index_lists(int n, int w,
                                          const std::vector<std::vector<int>>& one_based);
    std::vector<std::vector<int>> index_lists() const; ///< sorted 1-based indices
    void validate() const;
};

/// Hamming distance between the indicator vectors of two equal-size supports:
/// 2w - 2|E ∩ F|.
int hamming_distance_supports(std::uint64_t e, std::uint64_t f);

/// Minimum pairwise support distance; k_infinite_distance for |family| <= 1.
int min_distance(const SupportFamily& fam);

// Text format: header `n=<int> w=<int>`, then one support per line as sorted
// space-separated 1-based indices.
void write_family(std::ostream& os, const SupportFamily& fam);
SupportFamily read_family(std::istream& is);
std::string family_to_text(const SupportFamily& fam);
SupportFamily family_from_text(const std::string& text);

/// Arguments of the constant-weight size function A(n, d, w).
struct CWQuery {
    int n = 0;
    int d = 0;
    int w = 0;
};

enum class Exactness { exact, upper_bound };
enum class CWMethod { search, johnson, trivial, complement };

std::string to_string(Exactness e);
std::string to_string(CWMethod m);

/// A value for A(n, d, w) together with its provenance. Exact answers carry a
/// witness family attaining the value.
struct CWAnswer {
    CWQuery query{}; ///< with d normalized to the even value 2*ceil(d/2)
    BigInt value;
    Exactness exactness = Exactness::upper_bound;
    CWMethod method = CWMethod::trivial;
    std::optional<SupportFamily> witness;
};

/// Caps for the exact branch-and-bound search.
struct SearchLimits {
    int max_block_length = 14;
    long max_vertices = 4000;
    std::uint64_t node_budget = 50'000'000;
};

/// Thrown when an exact query falls outside the search caps (as opposed to a
/// malformed query). Trivial regimes — w in {0, n}, d > 2w after
/// normalization — are answered exactly at any block length up to 63 and
/// never raise this.
struct SearchCapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Outcome of the exact search. When the node budget runs out, `best_size`
/// is only a lower bound and `upper_bound` falls back to the best analytic
/// bound; callers must not treat an incomplete outcome as exact.
struct CWSearchResult {
    bool completed = false;
    BigInt best_size;      ///< exact value when completed, else a lower bound
    SupportFamily witness; ///< attains best_size
    BigInt upper_bound;    ///< == best_size when completed
    CWMethod method = CWMethod::search;
    std::uint64_t nodes = 0;

    CWAnswer exact_answer(const CWQuery& normalized) const; ///< throws if !completed
};

/// Exact A(n, d, w) by branch-and-bound clique search over the compatibility
/// graph of w-subsets (edges where |E ∩ F| <= w - d/2 after normalizing d to
/// an even value). The first codeword is fixed to {1, ..., w}: coordinate
/// permutations act transitively on w-subsets, so some maximum code contains
/// it. Throws SearchCapError when the query needs a search beyond the caps.
CWSearchResult max_constant_weight_exact(const CWQuery& query,
                                         const SearchLimits& limits = {});

/// Johnson bound: floor(dn / (dn - 2w(n-w))) when dn > 2w(n-w); nullopt when
/// the precondition fails (not applicable, as opposed to an error). Uses the
/// query's d as given, without normalization.
std::optional<CWAnswer> johnson_bound_cw(const CWQuery& query);

/// Best available upper bound on A(n, d, w): exact search when within caps,
/// the d > 2w rule after complement normalization w <- min(w, n-w), the
/// Johnson bound, and the C(n, w) fallback. Records which method won; the
/// complement tag marks values obtained through the weight-complement map.
CWAnswer cw_upper_bound(const CWQuery& query, const SearchLimits& limits = {});

} // namespace indel
