#pragma once

#include "pperm/parabolic.hpp"
#include "pperm/polynomial.hpp"

namespace pperm {

// The Eulerian polynomial A_n(t), by direct summation of t^des(w) over S_n.
IntPolynomial eulerian(int n, int bound = kDefaultEnumerationBound);

// h-polynomial of the partitioned permutohedron P_n(K): the descent
// generating polynomial of W(K). Degree n-1, palindromic.
IntPolynomial h_poly_partitioned(const KSubset& K, int bound = kDefaultEnumerationBound);

enum class GammaMethod { hpoly, tilde, hat };

// The gamma vector of P_n(K), by three independent routes: expanding the
// h-polynomial in the gamma basis, or counting tilde/hat minimal coset
// representatives by descents. All three agree entry-by-entry; each is
// computed independently here so their agreement stays testable.
GammaVector gamma_partitioned(const KSubset& K, GammaMethod method,
                              int bound = kDefaultEnumerationBound);

// Stirling number of the second kind S(n, k), exact.
std::int64_t stirling_second(int n, int k);

// f-polynomial of the full permutohedron P_n: face counts via ordered set
// partitions, f_i = (n-i)! * S(n, n-i). A geometry-free oracle for the
// h-polynomial route, since f(t-1) must reproduce the Eulerian polynomial.
IntPolynomial permutohedron_f_vector(int n);

}  // namespace pperm
