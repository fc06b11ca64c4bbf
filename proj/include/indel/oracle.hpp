#pragma once

#include <cstdint>

#include "indel/bounds.hpp"
#include "indel/numbers.hpp"
#include "indel/words.hpp"

namespace indel {

/// Enumeration caps for the brute-force oracles. Exceeding a cap is a
/// refusal (error), never silent sampling.
struct OracleLimits {
    std::uint64_t max_words = 5000;        ///< cap on q^n for exact code search
    std::uint64_t max_centers = 2'000'000; ///< cap on q^{n-s+t} center sweeps
    std::uint64_t node_budget = 200'000'000;
};

/// Result of an exact maximum-code search.
struct OracleResult {
    BigInt value;
    Code witness{2, 1};
    BigInt search_space; ///< q^n
    double elapsed_seconds = 0;
    std::uint64_t nodes = 0;
};

/// Exact maximum size of a q-ary length-n code with minimum Levenshtein
/// distance >= d: maximum clique over [q]^n with edges d_L >= d, lexicographic
/// branching. Throws when q^n exceeds the cap or the node budget runs out.
OracleResult max_indel_code_exact(const CodeParams& p, const OracleLimits& limits = {});

struct ListSizeScan {
    int max_list_size = 0;
    Word argmax_center;
};

/// Iterates every center z in [q]^{n-s+t} and returns the maximum of
/// |B(z, s, t) ∩ C| (LCS membership criterion) with its first argmax.
ListSizeScan verify_list_bound_everywhere(const Code& c, const ListParams& lp,
                                          const OracleLimits& limits = {});

/// The shortening map: each codeword truncated to its first n-s symbols (a
/// fixed subsequence choice). Throws when two codewords collide, which
/// signals a violation of the min-distance > 2s precondition.
Code shorten_code(const Code& c, int s);

/// Exact mean of |D_t(y) ∩ pi(C)| over all y in [q]^{n-s+t}, as a rational.
BigRat shortening_exact_mean(const Code& c, int s, int t,
                             const OracleLimits& limits = {});

/// The closed form |C| * I_q(n-s, t) / q^{n-s+t} the mean must equal.
BigRat shortening_closed_form_mean(const Code& c, int s, int t);

struct ShorteningSample {
    double mean = 0;
    double std_error = 0;
    int trials = 0;
    std::uint64_t seed = 0;
};

/// Monte Carlo version of the mean over uniformly random centers y, with the
/// sample standard error. The seed is required and echoed in the result.
ShorteningSample shortening_experiment(const Code& c, int s, int t, int trials,
                                       std::uint64_t seed);

} // namespace indel
