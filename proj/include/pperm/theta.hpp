#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pperm/parabolic.hpp"
#include "pperm/word.hpp"

namespace pperm {

// Closed interval of adjacent-transposition indices [lo, hi].
struct IndexInterval {
    int lo = 0;
    int hi = 0;

    bool operator==(const IndexInterval&) const = default;
};

// The indices at which the increasing j_single sweep actually acted, grouped
// into maximal runs of consecutive integers. Consecutive runs are separated
// by a gap of at least two, and replaying the runs reproduces j_full.
struct EffectiveExpression {
    std::vector<IndexInterval> intervals;

    bool empty() const { return intervals.empty(); }
    bool operator==(const EffectiveExpression&) const = default;
};

// A peak p = low + len of v followed immediately by the descending run
// p-1, ..., low in consecutive positions, with every tail letter in K.
struct PeakString {
    int peak = 0;      // the peak value
    int low = 0;       // smallest value of the run
    int position = 0;  // 1-based position of the peak in v

    int length() const { return peak - low; }
    bool operator==(const PeakString&) const = default;
};

// Intermediate permutations of a j_full / l_full run, for debugging
// roundtrip failures.
struct ThetaTrace {
    std::vector<std::pair<std::string, Permutation>> steps;
};

std::string trace_to_json(const ThetaTrace& trace);

// If neither "k before k+1" nor "k+1 immediately before k" holds in u, moves
// k+1 immediately left of k; otherwise returns u unchanged.
Permutation j_single(const Permutation& u, int k);

// Applies j_single for each k in K in increasing order. The result always
// lies in W(K).
Permutation j_full(const Permutation& u, const KSubset& K, ThetaTrace* trace = nullptr);

// Records which indices acted during the increasing sweep, grouped into
// maximal consecutive runs. Replaying the grouped runs must reproduce
// j_full(u, K) (std::logic_error otherwise). When the result has low-1
// immediately after an interval's low, low-1 must be outside K; violations
// throw std::domain_error and mean (u, K) is outside the theta domain.
EffectiveExpression effective_expression(const Permutation& u, const KSubset& K);

// All peak strings of v as defined above, greedily maximal at each peak,
// ordered by increasing low value. Requires v in W(K).
std::vector<PeakString> extract_strings(const Permutation& v, const KSubset& K);

// Inverse of j_full on W(K): processes the peak strings in decreasing order
// of low value, each time splicing the descending run leftwards past every
// smaller letter to the nearest letter exceeding the peak (or the front) and
// leaving the low value in place of the peak. Requires v in W(K).
Permutation l_full(const Permutation& v, const KSubset& K, ThetaTrace* trace = nullptr);

// The descent-preserving bijection
//   { (w, u) : w canonical with no initial descent, in W^K; u in Hop(w) } -> W(K),
// realized as (w, u) |-> j_full(u, K). Validates its preconditions.
Permutation theta(const Permutation& w, const Permutation& u, const KSubset& K);

// Inverse of theta: v |-> (canonical_rep(l_full(v, K)), l_full(v, K)).
std::pair<Permutation, Permutation> theta_inverse(const Permutation& v, const KSubset& K);

}  // namespace pperm
