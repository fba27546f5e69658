#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pperm {

// Univariate polynomial with exact 64-bit integer coefficients; any overflow
// throws. coeffs[i] is the coefficient of t^i. Trailing zeros are permitted
// (the degree bound of an ambient polytope is always passed separately), and
// equality is value equality, ignoring trailing zeros.
struct IntPolynomial {
    std::vector<std::int64_t> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> cs) : coeffs(std::move(cs)) {}

    std::int64_t coeff(int i) const;
    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return degree() < 0; }
    std::int64_t operator()(std::int64_t x) const;  // checked evaluation

    bool operator==(const IntPolynomial& o) const;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(std::int64_t c, const IntPolynomial& p);

// (1+t)^m, exact.
IntPolynomial binomial_power(int m);

// t^s * p.
IntPolynomial shift_up(const IntPolynomial& p, int s);

std::string to_string(const IntPolynomial& p);

// Substitutes t-1 for t: the f-polynomial of a simple d-polytope becomes its
// h-polynomial. Requires deg f <= d.
IntPolynomial f_to_h(const IntPolynomial& f, int d);

// coeff(i) == coeff(d-i) for all 0 <= i <= d. Requires deg h <= d.
bool is_palindromic(const IntPolynomial& h, int d);

// Coefficients of the unique expansion of a palindromic polynomial in the
// basis { t^j (1+t)^(d-2j) : 0 <= j <= floor(d/2) }. Entries may be negative
// for general palindromic input.
struct GammaVector {
    std::vector<std::int64_t> entries;  // entries[j] multiplies t^j (1+t)^(d-2j)
    int degree = 0;                     // ambient degree d

    GammaVector() = default;
    GammaVector(std::vector<std::int64_t> es, int d);

    bool operator==(const GammaVector&) const = default;
};

// Peels entries top-down: entry j is the t^j coefficient of the residual
// after the earlier basis terms are subtracted; the final residual must
// vanish exactly. Throws std::invalid_argument if h is not palindromic of
// degree bound d.
GammaVector gamma_expand(const IntPolynomial& h, int d);

// Exact expansion; gamma_expand(gamma_reconstruct(g), g.degree) == g.
IntPolynomial gamma_reconstruct(const GammaVector& g);

}  // namespace pperm
