#include "pperm/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pperm/checked.hpp"

namespace pperm {

namespace {

void require_bound(int n, int bound) {
    if (n > bound) {
        throw std::invalid_argument("enumeration bound exceeded: n=" + std::to_string(n) +
                                    " > bound=" + std::to_string(bound));
    }
}

int descents_of(const std::vector<int>& img) {
    int d = 0;
    for (std::size_t i = 0; i + 1 < img.size(); ++i) {
        if (img[i] > img[i + 1]) ++d;
    }
    return d;
}

}  // namespace

IntPolynomial eulerian(int n, int bound) {
    if (n < 0) throw std::invalid_argument("rank must be nonnegative");
    require_bound(n, bound);
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(std::max(n, 1)), 0);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    do {
        ++coeffs[static_cast<std::size_t>(descents_of(img))];
    } while (std::next_permutation(img.begin(), img.end()));
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial h_poly_partitioned(const KSubset& K, int bound) {
    const int n = K.n;
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
    require_bound(n, bound);
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n), 0);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<int> pos(static_cast<std::size_t>(n));
    do {
        for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(img[static_cast<std::size_t>(i)] - 1)] = i;
        bool member = true;
        for (int k : K.members) {
            const int pk = pos[static_cast<std::size_t>(k - 1)];
            const int pk1 = pos[static_cast<std::size_t>(k)];
            if (!(pk < pk1 || pk == pk1 + 1)) {
                member = false;
                break;
            }
        }
        if (member) ++coeffs[static_cast<std::size_t>(descents_of(img))];
    } while (std::next_permutation(img.begin(), img.end()));
    return IntPolynomial(std::move(coeffs));
}

GammaVector gamma_partitioned(const KSubset& K, GammaMethod method, int bound) {
    const int n = K.n;
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
    require_bound(n, bound);
    if (method == GammaMethod::hpoly) {
        return gamma_expand(h_poly_partitioned(K, bound), n - 1);
    }
    std::vector<std::int64_t> entries(static_cast<std::size_t>((n - 1) / 2 + 1), 0);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    do {
        Permutation w{std::vector<int>(img)};
        if (!is_min_rep(w, K)) continue;
        if (method == GammaMethod::tilde ? !is_tilde(w) : !is_hat(w)) continue;
        const int d = descent_count(w);
        if (d >= static_cast<int>(entries.size())) {
            throw std::logic_error("descent count escaped the gamma range");
        }
        ++entries[static_cast<std::size_t>(d)];
    } while (std::next_permutation(img.begin(), img.end()));
    return GammaVector(std::move(entries), n - 1);
}

std::int64_t stirling_second(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling_second requires n, k >= 0");
    if (k > n) return 0;
    if (n == 0) return 1;  // S(0,0) = 1
    // S(n,k) = k*S(n-1,k) + S(n-1,k-1)
    std::vector<std::int64_t> row(static_cast<std::size_t>(n + 1), 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j >= 1; --j) {
            row[static_cast<std::size_t>(j)] =
                checked_add(checked_mul(j, row[static_cast<std::size_t>(j)]),
                            row[static_cast<std::size_t>(j - 1)]);
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

IntPolynomial permutohedron_f_vector(int n) {
    if (n < 1 || n > 10) {
        throw std::invalid_argument("permutohedron_f_vector supports 1 <= n <= 10");
    }
    // i-dimensional faces correspond to ordered set partitions of [n] into
    // n-i blocks.
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n), 0);
    for (int i = 0; i <= n - 1; ++i) {
        coeffs[static_cast<std::size_t>(i)] =
            checked_mul(checked_factorial(n - i), stirling_second(n, n - i));
    }
    return IntPolynomial(std::move(coeffs));
}

}  // namespace pperm
