#pragma once

#include <vector>

#include "pperm/parabolic.hpp"
#include "pperm/polynomial.hpp"
#include "pperm/word.hpp"

namespace pperm {

// Moves the free letter j across the adjacent valley(s) to the nearest slope
// of the same height: a letter on a downslope hops right, a letter on an
// upslope hops left, with +infinity sentinels at both ends. Involutive.
// Hopping j on a peak or valley is an error, never a silent identity.
Permutation hop_single(const Permutation& w, int j);

// Composition of single hops over a set of free letters of w. The result is
// independent of the application order; this implementation applies them in
// ascending letter order and tests cover the order-independence.
Permutation hop_set(const Permutation& w, const std::vector<int>& letters);

// The unique member of the hop class with every free letter on an upslope.
Permutation canonical_rep(const Permutation& w);

// Orbit of w under free-letter hops, with its canonical representative.
// Built by toggling each free letter of the canonical representative
// independently, so the size is exactly 2^(number of free letters).
struct HopClass {
    Permutation canonical;
    std::vector<Permutation> members;  // lexicographically sorted

    int size() const { return static_cast<int>(members.size()); }
};

HopClass hop_class(const Permutation& w, int bound = kDefaultEnumerationBound);

// Descent generating polynomial of the class, computed by direct summation.
// It must factor as t^pk (1+t)^(n-1-2pk); a mismatch signals an
// implementation bug and throws std::logic_error.
IntPolynomial class_descent_poly(const HopClass& c);

}  // namespace pperm
