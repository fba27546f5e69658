#include "pperm/parabolic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pperm {

KSubset::KSubset(int rank, std::vector<int> ks) : n(rank), members(std::move(ks)) {
    if (n < 0) throw std::invalid_argument("rank must be nonnegative");
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
        const int k = members[i];
        if (k < 1 || k > n - 1) {
            throw std::invalid_argument("K members must lie in [1, n-1]");
        }
        if (i > 0 && members[i - 1] == k) {
            throw std::invalid_argument("K members must be distinct");
        }
    }
}

bool KSubset::contains(int k) const {
    return std::binary_search(members.begin(), members.end(), k);
}

std::vector<std::pair<int, int>> KSubset::intervals() const {
    std::vector<std::pair<int, int>> runs;
    for (std::size_t i = 0; i < members.size();) {
        std::size_t j = i;
        while (j + 1 < members.size() && members[j + 1] == members[j] + 1) ++j;
        runs.emplace_back(members[i], members[j]);
        i = j + 1;
    }
    return runs;
}

Composition::Composition(std::vector<int> ps) : parts(std::move(ps)) {
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
    }
}

int Composition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<std::pair<int, int>> orbits(const KSubset& K) {
    std::vector<std::pair<int, int>> out;
    int start = 1;
    for (int i = 1; i <= K.n; ++i) {
        const bool joined_to_next = i < K.n && K.contains(i);
        if (!joined_to_next) {
            out.emplace_back(start, i);
            start = i + 1;
        }
    }
    return out;
}

Composition composition_mu(const KSubset& K) {
    std::vector<int> parts;
    for (const auto& [a, b] : orbits(K)) parts.push_back(b - a + 1);
    return Composition(std::move(parts));
}

namespace {

void require_rank(const Permutation& w, const KSubset& K) {
    if (w.size() != K.n) {
        throw std::invalid_argument("rank mismatch between permutation and K");
    }
}

void require_bound(int n, int bound) {
    if (n > bound) {
        throw std::invalid_argument("enumeration bound exceeded: n=" + std::to_string(n) +
                                    " > bound=" + std::to_string(bound));
    }
}

bool passes_filter(const Permutation& w, MinRepFilter filter) {
    switch (filter) {
        case MinRepFilter::all: return true;
        case MinRepFilter::tilde: return is_tilde(w);
        case MinRepFilter::hat: return is_hat(w);
    }
    return false;
}

}  // namespace

bool is_min_rep(const Permutation& w, const KSubset& K) {
    require_rank(w, K);
    const std::vector<int> pos = w.inverse_positions();
    for (const auto& [a, b] : K.intervals()) {
        for (int value = a; value <= b; ++value) {
            if (pos[static_cast<std::size_t>(value - 1)] >
                pos[static_cast<std::size_t>(value)]) {
                return false;
            }
        }
    }
    return true;
}

bool is_in_w_of_k(const Permutation& w, const KSubset& K) {
    require_rank(w, K);
    const std::vector<int> pos = w.inverse_positions();
    for (int k : K.members) {
        const int pk = pos[static_cast<std::size_t>(k - 1)];
        const int pk1 = pos[static_cast<std::size_t>(k)];
        if (!(pk < pk1 || pk == pk1 + 1)) return false;
    }
    return true;
}

std::vector<Permutation> enumerate_w_upper_k(const KSubset& K, MinRepFilter filter,
                                             int bound) {
    require_bound(K.n, bound);
    std::vector<Permutation> out;
    std::vector<int> img(static_cast<std::size_t>(K.n));
    std::iota(img.begin(), img.end(), 1);
    do {
        Permutation w(img);
        if (is_min_rep(w, K) && passes_filter(w, filter)) out.push_back(std::move(w));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;  // next_permutation emits lexicographic order
}

std::vector<Permutation> enumerate_w_of_k(const KSubset& K, int bound) {
    require_bound(K.n, bound);
    std::vector<Permutation> out;
    std::vector<int> img(static_cast<std::size_t>(K.n));
    std::iota(img.begin(), img.end(), 1);
    do {
        Permutation w(img);
        if (is_in_w_of_k(w, K)) out.push_back(std::move(w));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

KSubset k_star(const KSubset& K) {
    std::vector<int> dual;
    dual.reserve(K.members.size());
    for (int k : K.members) dual.push_back(K.n - k);
    return KSubset(K.n, std::move(dual));
}

std::string to_string(const KSubset& K) {
    std::string out;
    for (std::size_t i = 0; i < K.members.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(K.members[i]);
    }
    return out;
}

KSubset parse_ksubset(const std::string& text, int n) {
    std::vector<int> members;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("malformed K: empty entry");
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed K entry '" + tok + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("malformed K entry '" + tok + "'");
        members.push_back(k);
    }
    return KSubset(n, std::move(members));
}

std::vector<KSubset> all_k_subsets(int n) {
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
    std::vector<KSubset> out;
    const unsigned total = 1u << (n - 1);
    out.reserve(total);
    for (unsigned mask = 0; mask < total; ++mask) {
        std::vector<int> members;
        for (int k = 1; k <= n - 1; ++k) {
            if (mask & (1u << (k - 1))) members.push_back(k);
        }
        out.emplace_back(n, std::move(members));
    }
    return out;
}

}  // namespace pperm
