#pragma once

#include <string>
#include <vector>

#include "indel/bounds.hpp"
#include "indel/constant_weight.hpp"
#include "indel/words.hpp"

namespace indel {

/// An explicit code C and center z for which the list B(z, s, t) ∩ C meets
/// the constant-weight list-size bound with equality. The witness family
/// holds the weight-(n-s) supports, aligned index-for-index with
/// marker_symbols (one marker per codeword; empty when s == 0).
struct TightnessInstance {
    CodeParams params;
    ListParams list_params;
    Word center;
    Code code;
    SupportFamily witness_family;
    std::vector<int> marker_symbols;
};

/// Builds the instance: z = (0, 1, ..., n-s+t-1) over [q], a maximum
/// weight-(n-s) family F obtained by complementing a maximum weight-t family,
/// and codewords c_F = (marker repeated s times) ++ (subsequence of z indexed
/// by F). Requires s <= floor((d-1)/2), q >= n-s+t + A(n-s+t, d-2s, t) when
/// s > 0 (q >= n+t suffices for s == 0), and the query within search caps.
TightnessInstance build_tightness_instance(const CodeParams& p, const ListParams& lp,
                                           const SearchLimits& limits = {});

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/// Re-checks an instance from its serialized content alone: (a) the code's
/// minimum Levenshtein distance is >= d, (b) every codeword lies in
/// B(z, s, t) by the LCS membership criterion, (c) the code size equals the
/// freshly recomputed exact A(n-s+t, d-2s, t). Failures are report entries,
/// not errors.
VerificationReport verify_tightness_instance(const TightnessInstance& inst,
                                             const SearchLimits& limits = {});

/// The encoding of a list into a constant-weight code: for each word c of the
/// list (all inside B(z, s, t)), a support S_c of size n-s such that the
/// subsequence of z indexed by S_c is a subsequence of c. S_c is the
/// lexicographically smallest maximizing LCS index set trimmed to its n-s
/// smallest indices. Distinct list members must map to distinct supports;
/// a collision means the min-distance precondition d > 2s was violated.
SupportFamily encode_list_to_constant_weight(const Word& z, const Code& list,
                                             int s, int t);

} // namespace indel
