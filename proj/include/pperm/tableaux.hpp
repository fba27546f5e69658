#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pperm/parabolic.hpp"
#include "pperm/polynomial.hpp"
#include "pperm/word.hpp"

namespace pperm {

// Weakly decreasing sequence of positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> ps);

    int size() const;  // total number of boxes
    int rows() const { return static_cast<int>(parts.size()); }

    bool operator==(const Partition&) const = default;
};

// Filling of a Young diagram, stored row by row.
struct YoungTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    int boxes() const;
    bool operator==(const YoungTableau&) const = default;
    bool operator<(const YoungTableau& o) const { return rows < o.rows; }
};

// Rows weakly increase, columns strictly increase.
bool is_semistandard(const YoungTableau& t);
// Semistandard with content (1,...,1) over [n].
bool is_standard(const YoungTableau& t);

// Multiplicity vector of the entries, indexed from letter 1.
std::vector<int> content(const YoungTableau& t);

// Descents of a standard tableau: i such that i sits in a strictly higher
// row than i+1.
std::vector<int> tableau_descent_set(const YoungTableau& q);
int tableau_descent_count(const YoungTableau& q);
DescentFlags tableau_descent_flags(const YoungTableau& q);
bool is_tilde(const YoungTableau& q);
bool is_hat(const YoungTableau& q);

enum class SytFilter { all, tilde, hat };

// All standard Young tableaux of the shape, sorted by row-reading word.
std::vector<YoungTableau> enumerate_syt(const Partition& shape, SytFilter filter,
                                        int bound = kDefaultEnumerationBound + 2);

// Hook length formula; agrees with |enumerate_syt(shape, all)|.
std::int64_t dim_irreducible(const Partition& shape);

// All semistandard tableaux of the shape with the given content, sorted by
// row-reading word.
std::vector<YoungTableau> enumerate_ssyt(const Partition& shape, const Composition& mu);

// Number of semistandard tableaux of the shape with content mu, by direct
// enumeration.
std::int64_t kostka(const Partition& shape, const Composition& mu);

// All partitions of n, first part descending.
std::vector<Partition> partitions_of(int n);

// Standardization sending the k-th smallest position holding letter i to
// k + mu_1 + ... + mu_{i-1}, where mu = mu(K). A descent-preserving
// bijection from words with content mu(K), no double descent and no final
// descent onto the hat minimal coset representatives of K.
Permutation phi(const Word& v, const KSubset& K);

enum class SytVariant { hat, tilde };

// Gamma vector of P_n(K) through the tableau route: entry j sums the Kostka
// numbers K_{shape(Q), mu(K)} over hat (or tilde) standard tableaux Q with
// exactly j descents. Matches gamma_partitioned on every K.
GammaVector rep_gamma(const KSubset& K, SytVariant variant = SytVariant::hat,
                      int bound = kDefaultEnumerationBound);

// JSON array-of-rows form, e.g. [[1,2,4],[3,5]].
std::string to_string(const YoungTableau& t);
Partition parse_partition(const std::string& text);  // comma-separated parts

}  // namespace pperm
