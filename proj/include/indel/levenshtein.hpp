#pragma once

#include <cstdint>
#include <vector>

#include "indel/numbers.hpp"
#include "indel/words.hpp"

namespace indel {

/// Length of a longest common subsequence. Standard dynamic programming over
/// a (|x|+1) x (|y|+1) table; symmetric in its arguments.
int lcs(const Word& x, const Word& y);

/// Minimum number of insertions plus deletions transforming x into y;
/// equals |x| + |y| - 2*lcs(x, y).
int levenshtein_distance(const Word& x, const Word& y);

/// All words of length |x|+t obtained from x by exactly t insertions,
/// sorted and de-duplicated.
std::vector<Word> insertion_ball(const Word& x, int t);

/// All distinct length-(|y|-t) subsequences of y. Requires 0 <= t <= |y|.
std::vector<Word> deletion_ball(const Word& y, int t);

/// Caps for exhaustive ball enumeration; exceeding any of them is an error,
/// never silent truncation.
struct BallEnumLimits {
    int max_word_length = 16;
    int max_deletions = 4;
    std::uint64_t max_words = 5'000'000;
};

/// All words reachable from z by at most s insertions and at most t
/// deletions, in any order. Requires t <= |z|.
std::vector<Word> fixed_radius_ball(const Word& z, int s, int t,
                                    const BallEnumLimits& limits = {});

/// Membership test for the (s,t) ball around z. Order-independent criterion:
/// w belongs iff some t' <= t, s' <= s satisfy |w| = |z| + s' - t' and
/// LCS(z, w) >= |z| - t'.
bool in_fixed_radius_ball(const Word& z, int s, int t, const Word& w);

/// Size of the t-insertion ball around any length-n word over a q-ary
/// alphabet: sum_{i=0}^{t} C(n+t, i) (q-1)^i. Exact integer arithmetic.
BigInt insertion_ball_size(int q, int n, int t);

/// Minimum pairwise Levenshtein distance; k_infinite_distance when the code
/// has fewer than two words.
int min_levenshtein_distance(const Code& c);

/// Indices into z of one longest common subsequence of z and c, chosen as the
/// lexicographically smallest maximizing index set. 0-based, ascending.
std::vector<int> lcs_index_set(const Word& z, const Word& c);

} // namespace indel
