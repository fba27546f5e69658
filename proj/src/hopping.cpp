#include "pperm/hopping.hpp"

#include <algorithm>
#include <stdexcept>

namespace pperm {

namespace {

void require_bound(int n, int bound) {
    if (n > bound) {
        throw std::invalid_argument("enumeration bound exceeded: n=" + std::to_string(n) +
                                    " > bound=" + std::to_string(bound));
    }
}

}  // namespace

Permutation hop_single(const Permutation& w, int j) {
    const int n = w.size();
    if (j < 1 || j > n) throw std::invalid_argument("letter out of range");
    const int i = w.position_of(j);
    const PositionKind kind = classify_positions(w).at(i);
    if (kind == PositionKind::peak || kind == PositionKind::valley) {
        throw std::invalid_argument("hop rejected: " + std::to_string(j) +
                                    " is not a free letter");
    }

    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    if (kind == PositionKind::free_down) {
        // Smallest k > i with w(k) < j < w(k+1), taking w(n+1) = +infinity.
        int k = 0;
        for (int cand = i + 1; cand <= n; ++cand) {
            if (w.at(cand) < j && (cand == n || w.at(cand + 1) > j)) {
                k = cand;
                break;
            }
        }
        if (k == 0) throw std::logic_error("no landing slot right of a downslope letter");
        for (int p = 1; p <= i - 1; ++p) out.push_back(w.at(p));
        for (int p = i + 1; p <= k; ++p) out.push_back(w.at(p));
        out.push_back(j);
        for (int p = k + 1; p <= n; ++p) out.push_back(w.at(p));
    } else {
        // Largest k < i with w(k-1) > j > w(k), taking w(0) = +infinity.
        int k = 0;
        for (int cand = i - 1; cand >= 1; --cand) {
            if (w.at(cand) < j && (cand == 1 || w.at(cand - 1) > j)) {
                k = cand;
                break;
            }
        }
        if (k == 0) throw std::logic_error("no landing slot left of an upslope letter");
        for (int p = 1; p <= k - 1; ++p) out.push_back(w.at(p));
        out.push_back(j);
        for (int p = k; p <= i - 1; ++p) out.push_back(w.at(p));
        for (int p = i + 1; p <= n; ++p) out.push_back(w.at(p));
    }
    return Permutation(std::move(out));
}

Permutation hop_set(const Permutation& w, const std::vector<int>& letters) {
    std::vector<int> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("hop letters must be distinct");
    }
    const PositionClass pc = classify_positions(w);
    for (int j : sorted) {
        if (j < 1 || j > w.size()) throw std::invalid_argument("letter out of range");
        const PositionKind kind = pc.at(w.position_of(j));
        if (kind == PositionKind::peak || kind == PositionKind::valley) {
            throw std::invalid_argument("hop rejected: " + std::to_string(j) +
                                        " is not a free letter");
        }
    }
    Permutation cur = w;
    for (int j : sorted) cur = hop_single(cur, j);
    return cur;
}

Permutation canonical_rep(const Permutation& w) {
    const PositionClass pc = classify_positions(w);
    std::vector<int> downs;
    for (int pos : pc.positions(PositionKind::free_down)) downs.push_back(w.at(pos));
    std::sort(downs.begin(), downs.end());
    Permutation cur = w;
    for (int j : downs) cur = hop_single(cur, j);
    if (classify_positions(cur).count(PositionKind::free_down) != 0) {
        throw std::logic_error("canonical representative still has a downslope free letter");
    }
    return cur;
}

HopClass hop_class(const Permutation& w, int bound) {
    require_bound(w.size(), bound);
    HopClass cls;
    cls.canonical = canonical_rep(w);

    const PositionClass pc = classify_positions(cls.canonical);
    std::vector<int> free_letters;
    for (int pos = 1; pos <= cls.canonical.size(); ++pos) {
        const PositionKind k = pc.at(pos);
        if (k == PositionKind::free_up || k == PositionKind::free_down) {
            free_letters.push_back(cls.canonical.at(pos));
        }
    }
    std::sort(free_letters.begin(), free_letters.end());

    const std::size_t total = std::size_t{1} << free_letters.size();
    cls.members.reserve(total);
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<int> subset;
        for (std::size_t b = 0; b < free_letters.size(); ++b) {
            if (mask & (std::size_t{1} << b)) subset.push_back(free_letters[b]);
        }
        cls.members.push_back(hop_set(cls.canonical, subset));
    }
    std::sort(cls.members.begin(), cls.members.end());
    if (std::adjacent_find(cls.members.begin(), cls.members.end()) != cls.members.end()) {
        throw std::logic_error("free-letter toggles produced a repeated class member");
    }
    return cls;
}

IntPolynomial class_descent_poly(const HopClass& c) {
    if (c.members.empty()) throw std::invalid_argument("empty hop class");
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(std::max(c.canonical.size(), 1)), 0);
    for (const Permutation& u : c.members) {
        ++coeffs[static_cast<std::size_t>(descent_count(u))];
    }
    IntPolynomial direct{std::move(coeffs)};

    const int n = c.canonical.size();
    const int pk = peak_count(c.canonical);
    const IntPolynomial closed = shift_up(binomial_power(n - 1 - 2 * pk), pk);
    if (!(direct == closed)) {
        throw std::logic_error("hop class descent polynomial does not factor as t^pk (1+t)^(n-1-2pk)");
    }
    return direct;
}

}  // namespace pperm
