#include "pperm/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "pperm/checked.hpp"

namespace pperm {

std::int64_t IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[static_cast<std::size_t>(i)];
}

int IntPolynomial::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        if (coeffs[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
}

std::int64_t IntPolynomial::operator()(std::int64_t x) const {
    std::int64_t acc = 0;
    for (int i = degree(); i >= 0; --i) {
        acc = checked_add(checked_mul(acc, x), coeff(i));
    }
    return acc;
}

bool IntPolynomial::operator==(const IntPolynomial& o) const {
    const int top = std::max(static_cast<int>(coeffs.size()),
                             static_cast<int>(o.coeffs.size()));
    for (int i = 0; i < top; ++i) {
        if (coeff(i) != o.coeff(i)) return false;
    }
    return true;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> out(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = checked_add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> out(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = checked_sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<std::int64_t> out(
        static_cast<std::size_t>(a.degree() + b.degree() + 1), 0);
    for (int i = 0; i <= a.degree(); ++i) {
        for (int j = 0; j <= b.degree(); ++j) {
            const std::size_t k = static_cast<std::size_t>(i + j);
            out[k] = checked_add(out[k], checked_mul(a.coeff(i), b.coeff(j)));
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(std::int64_t c, const IntPolynomial& p) {
    std::vector<std::int64_t> out(p.coeffs.size(), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = checked_mul(c, p.coeffs[i]);
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial binomial_power(int m) {
    if (m < 0) throw std::invalid_argument("binomial_power requires m >= 0");
    std::vector<std::int64_t> row{1};
    for (int step = 0; step < m; ++step) {
        std::vector<std::int64_t> next(row.size() + 1, 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            next[i] = checked_add(next[i], row[i]);
            next[i + 1] = checked_add(next[i + 1], row[i]);
        }
        row = std::move(next);
    }
    return IntPolynomial(std::move(row));
}

IntPolynomial shift_up(const IntPolynomial& p, int s) {
    if (s < 0) throw std::invalid_argument("shift_up requires s >= 0");
    std::vector<std::int64_t> out(p.coeffs.size() + static_cast<std::size_t>(s), 0);
    std::copy(p.coeffs.begin(), p.coeffs.end(), out.begin() + s);
    return IntPolynomial(std::move(out));
}

std::string to_string(const IntPolynomial& p) {
    std::string out = "[";
    const int top = std::max(p.degree(), 0);
    for (int i = 0; i <= top; ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p.coeff(i));
    }
    out += ']';
    return out;
}

IntPolynomial f_to_h(const IntPolynomial& f, int d) {
    if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
    if (f.degree() > d) throw std::invalid_argument("polynomial degree exceeds declared bound");
    // Horner in t-1: h = (...(f_d (t-1) + f_{d-1}) (t-1) + ...) + f_0.
    IntPolynomial h;
    for (int i = d; i >= 0; --i) {
        std::vector<std::int64_t> next(h.coeffs.size() + 1, 0);
        for (std::size_t j = 0; j < h.coeffs.size(); ++j) {
            next[j + 1] = checked_add(next[j + 1], h.coeffs[j]);
            next[j] = checked_sub(next[j], h.coeffs[j]);
        }
        next[0] = checked_add(next[0], f.coeff(i));
        h = IntPolynomial(std::move(next));
    }
    return h;
}

bool is_palindromic(const IntPolynomial& h, int d) {
    if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
    if (h.degree() > d) throw std::invalid_argument("polynomial degree exceeds declared bound");
    for (int i = 0; i <= d / 2; ++i) {
        if (h.coeff(i) != h.coeff(d - i)) return false;
    }
    return true;
}

GammaVector::GammaVector(std::vector<std::int64_t> es, int d) : entries(std::move(es)), degree(d) {
    if (d < 0) throw std::invalid_argument("gamma degree must be nonnegative");
    if (static_cast<int>(entries.size()) != d / 2 + 1) {
        throw std::invalid_argument("gamma vector must have floor(d/2)+1 entries");
    }
}

GammaVector gamma_expand(const IntPolynomial& h, int d) {
    if (!is_palindromic(h, d)) {
        throw std::invalid_argument("gamma expansion requires a palindromic polynomial");
    }
    IntPolynomial residual = h;
    std::vector<std::int64_t> entries(static_cast<std::size_t>(d / 2 + 1), 0);
    for (int j = 0; j <= d / 2; ++j) {
        const std::int64_t g = residual.coeff(j);
        entries[static_cast<std::size_t>(j)] = g;
        if (g != 0) {
            residual = residual - g * shift_up(binomial_power(d - 2 * j), j);
        }
    }
    if (!residual.is_zero()) {
        throw std::logic_error("gamma peeling left a nonzero residual");
    }
    return GammaVector(std::move(entries), d);
}

IntPolynomial gamma_reconstruct(const GammaVector& g) {
    IntPolynomial acc;
    for (int j = 0; j < static_cast<int>(g.entries.size()); ++j) {
        const std::int64_t e = g.entries[static_cast<std::size_t>(j)];
        if (e != 0) {
            acc = acc + e * shift_up(binomial_power(g.degree - 2 * j), j);
        }
    }
    return acc;
}

}  // namespace pperm
