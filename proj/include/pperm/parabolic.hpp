#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pperm/word.hpp"

namespace pperm {

// Enumerations over S_n refuse to run past this rank unless the caller
// passes an explicit larger bound (10! is about 3.6M permutations).
inline constexpr int kDefaultEnumerationBound = 10;

// A subset K of [n-1] carried together with its ambient rank n. The same
// member set means different objects for different n, so mixed-rank inputs
// are rejected rather than guessed at.
struct KSubset {
    int n = 0;                 // ambient rank of S_n
    std::vector<int> members;  // sorted ascending, each in [1, n-1]

    KSubset() = default;
    KSubset(int rank, std::vector<int> ks);

    bool contains(int k) const;
    bool empty() const { return members.empty(); }

    // Maximal consecutive runs [a,b] whose union is the member set.
    std::vector<std::pair<int, int>> intervals() const;

    bool operator==(const KSubset&) const = default;
};

// A sequence of positive parts summing to n.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> ps);

    int total() const;
    int size() const { return static_cast<int>(parts.size()); }

    bool operator==(const Composition&) const = default;
};

// Orbits of the subgroup generated by the adjacent transpositions indexed by
// K, as intervals partitioning [n] left to right.
std::vector<std::pair<int, int>> orbits(const KSubset& K);

// Orbit sizes, left to right.
Composition composition_mu(const KSubset& K);

// Minimal-length coset representative test: for every maximal run [a,b] of
// K, the values a, a+1, ..., b+1 appear in w in increasing positional order.
bool is_min_rep(const Permutation& w, const KSubset& K);

// Membership in W(K): every k in K either precedes k+1 or sits immediately
// right of k+1 (equivalently pos(k) - pos(k+1) <= 1).
bool is_in_w_of_k(const Permutation& w, const KSubset& K);

enum class MinRepFilter { all, tilde, hat };

// Minimal coset representatives, optionally restricted by the tilde/hat
// descent conditions. Lexicographically sorted.
std::vector<Permutation> enumerate_w_upper_k(const KSubset& K, MinRepFilter filter,
                                             int bound = kDefaultEnumerationBound);

// All of W(K), lexicographically sorted.
std::vector<Permutation> enumerate_w_of_k(const KSubset& K,
                                          int bound = kDefaultEnumerationBound);

// The dual subset {n-k : k in K}; an involution.
KSubset k_star(const KSubset& K);

// Serialized as comma-separated 1-based members ("1,3"); empty set is "".
std::string to_string(const KSubset& K);
KSubset parse_ksubset(const std::string& text, int n);

// All 2^(n-1) subsets of [n-1], in deterministic order (by bitmask value).
std::vector<KSubset> all_k_subsets(int n);

}  // namespace pperm
