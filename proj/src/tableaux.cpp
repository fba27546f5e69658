#include "pperm/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pperm/checked.hpp"

namespace pperm {

Partition::Partition(std::vector<int> ps) : parts(std::move(ps)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i - 1] < parts[i]) {
            throw std::invalid_argument("partition parts must weakly decrease");
        }
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition YoungTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int YoungTableau::boxes() const {
    int total = 0;
    for (const auto& row : rows) total += static_cast<int>(row.size());
    return total;
}

bool is_semistandard(const YoungTableau& t) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.empty()) return false;
        if (r > 0 && row.size() > t.rows[r - 1].size()) return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1) return false;
            if (c > 0 && row[c - 1] > row[c]) return false;
            if (r > 0 && t.rows[r - 1][c] >= row[c]) return false;
        }
    }
    return true;
}

bool is_standard(const YoungTableau& t) {
    if (!is_semistandard(t)) return false;
    const int n = t.boxes();
    std::vector<int> c = content(t);
    if (static_cast<int>(c.size()) != n) return false;
    return std::all_of(c.begin(), c.end(), [](int m) { return m == 1; });
}

std::vector<int> content(const YoungTableau& t) {
    int top = 0;
    for (const auto& row : t.rows) {
        for (int x : row) top = std::max(top, x);
    }
    std::vector<int> counts(static_cast<std::size_t>(top), 0);
    for (const auto& row : t.rows) {
        for (int x : row) ++counts[static_cast<std::size_t>(x - 1)];
    }
    return counts;
}

namespace {

void require_standard(const YoungTableau& q) {
    if (!is_standard(q)) throw std::invalid_argument("tableau is not standard");
}

// Row index (0-based) of each entry of a standard tableau.
std::vector<int> entry_rows(const YoungTableau& q) {
    std::vector<int> row_of(static_cast<std::size_t>(q.boxes()), -1);
    for (std::size_t r = 0; r < q.rows.size(); ++r) {
        for (int x : q.rows[r]) row_of[static_cast<std::size_t>(x - 1)] = static_cast<int>(r);
    }
    return row_of;
}

std::vector<int> reading_word(const YoungTableau& t) {
    std::vector<int> out;
    for (const auto& row : t.rows) out.insert(out.end(), row.begin(), row.end());
    return out;
}

void require_bound(int n, int bound) {
    if (n > bound) {
        throw std::invalid_argument("enumeration bound exceeded: n=" + std::to_string(n) +
                                    " > bound=" + std::to_string(bound));
    }
}

}  // namespace

std::vector<int> tableau_descent_set(const YoungTableau& q) {
    require_standard(q);
    const std::vector<int> row_of = entry_rows(q);
    std::vector<int> out;
    for (int i = 1; i < q.boxes(); ++i) {
        if (row_of[static_cast<std::size_t>(i - 1)] < row_of[static_cast<std::size_t>(i)]) {
            out.push_back(i);
        }
    }
    return out;
}

int tableau_descent_count(const YoungTableau& q) {
    return static_cast<int>(tableau_descent_set(q).size());
}

DescentFlags tableau_descent_flags(const YoungTableau& q) {
    const std::vector<int> des = tableau_descent_set(q);
    const int n = q.boxes();
    DescentFlags f;
    for (std::size_t i = 0; i < des.size(); ++i) {
        if (des[i] == 1) f.initial_descent = true;
        if (des[i] == n - 1) f.final_descent = true;
        if (i > 0 && des[i - 1] + 1 == des[i]) f.double_descent = true;
    }
    return f;
}

bool is_tilde(const YoungTableau& q) {
    const DescentFlags f = tableau_descent_flags(q);
    return !f.double_descent && !f.initial_descent;
}

bool is_hat(const YoungTableau& q) {
    const DescentFlags f = tableau_descent_flags(q);
    return !f.double_descent && !f.final_descent;
}

std::vector<YoungTableau> enumerate_syt(const Partition& shape, SytFilter filter, int bound) {
    const int n = shape.size();
    require_bound(n, bound);
    std::vector<YoungTableau> out;
    if (n == 0) return out;

    YoungTableau work;
    work.rows.assign(shape.parts.size(), {});
    std::vector<int> fill(shape.parts.size(), 0);

    auto rec = [&](auto&& self, int entry) -> void {
        if (entry > n) {
            out.push_back(work);
            return;
        }
        for (std::size_t r = 0; r < shape.parts.size(); ++r) {
            if (fill[r] >= shape.parts[r]) continue;
            if (r > 0 && fill[r - 1] <= fill[r]) continue;
            work.rows[r].push_back(entry);
            ++fill[r];
            self(self, entry + 1);
            --fill[r];
            work.rows[r].pop_back();
        }
    };
    rec(rec, 1);

    std::sort(out.begin(), out.end(), [](const YoungTableau& a, const YoungTableau& b) {
        return reading_word(a) < reading_word(b);
    });

    if (filter != SytFilter::all) {
        std::vector<YoungTableau> kept;
        for (auto& t : out) {
            if (filter == SytFilter::tilde ? is_tilde(t) : is_hat(t)) kept.push_back(std::move(t));
        }
        out = std::move(kept);
    }
    return out;
}

std::int64_t dim_irreducible(const Partition& shape) {
    const int n = shape.size();
    require_bound(n, 20);
    if (n == 0) return 1;
    std::vector<int> conj(static_cast<std::size_t>(shape.parts[0]), 0);
    for (int part : shape.parts) {
        for (int c = 0; c < part; ++c) ++conj[static_cast<std::size_t>(c)];
    }
    std::int64_t hooks = 1;
    for (int r = 0; r < shape.rows(); ++r) {
        for (int c = 0; c < shape.parts[static_cast<std::size_t>(r)]; ++c) {
            const int hook = (shape.parts[static_cast<std::size_t>(r)] - c) +
                             (conj[static_cast<std::size_t>(c)] - r) - 1;
            hooks = checked_mul(hooks, hook);
        }
    }
    const std::int64_t fact = checked_factorial(n);
    if (fact % hooks != 0) throw std::logic_error("hook product does not divide n!");
    return fact / hooks;
}

std::vector<YoungTableau> enumerate_ssyt(const Partition& shape, const Composition& mu) {
    if (shape.size() != mu.total()) {
        throw std::invalid_argument("shape size and content total differ");
    }
    std::vector<YoungTableau> out;
    const int n = shape.size();
    if (n == 0) return out;
    const int m = mu.size();

    YoungTableau work;
    work.rows.assign(shape.parts.size(), {});
    std::vector<int> remaining(mu.parts.begin(), mu.parts.end());

    // Cells in row-major order; each entry must weakly exceed its left
    // neighbor, strictly exceed the one above, and respect the remaining
    // content counts.
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == shape.rows()) {
            out.push_back(work);
            return;
        }
        const int next_r = (c + 1 < shape.parts[static_cast<std::size_t>(r)]) ? r : r + 1;
        const int next_c = (c + 1 < shape.parts[static_cast<std::size_t>(r)]) ? c + 1 : 0;
        const int min_left = (c > 0) ? work.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] : 1;
        const int min_above = (r > 0) ? work.rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1 : 1;
        for (int v = std::max(min_left, min_above); v <= m; ++v) {
            if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<std::size_t>(v - 1)];
            work.rows[static_cast<std::size_t>(r)].push_back(v);
            self(self, next_r, next_c);
            work.rows[static_cast<std::size_t>(r)].pop_back();
            ++remaining[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(rec, 0, 0);

    std::sort(out.begin(), out.end(), [](const YoungTableau& a, const YoungTableau& b) {
        return reading_word(a) < reading_word(b);
    });
    return out;
}

std::int64_t kostka(const Partition& shape, const Composition& mu) {
    return static_cast<std::int64_t>(enumerate_ssyt(shape, mu).size());
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            parts.push_back(p);
            self(self, rest - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Permutation phi(const Word& v, const KSubset& K) {
    const Composition mu = composition_mu(K);
    const int n = K.n;
    const int m = mu.size();
    if (v.size() != n) throw std::invalid_argument("word length differs from rank of K");
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    for (int x : v.letters) {
        if (x > m) throw std::invalid_argument("word content does not match mu(K)");
        ++counts[static_cast<std::size_t>(x - 1)];
    }
    for (int i = 0; i < m; ++i) {
        if (counts[static_cast<std::size_t>(i)] != mu.parts[static_cast<std::size_t>(i)]) {
            throw std::invalid_argument("word content does not match mu(K)");
        }
    }
    if (!is_hat(v)) {
        throw std::invalid_argument("word must have no double descent and no final descent");
    }

    std::vector<int> offset(static_cast<std::size_t>(m), 0);
    for (int i = 1; i < m; ++i) {
        offset[static_cast<std::size_t>(i)] =
            offset[static_cast<std::size_t>(i - 1)] + mu.parts[static_cast<std::size_t>(i - 1)];
    }
    std::vector<int> seen(static_cast<std::size_t>(m), 0);
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const int letter = v.letters[static_cast<std::size_t>(j)];
        img[static_cast<std::size_t>(j)] =
            ++seen[static_cast<std::size_t>(letter - 1)] + offset[static_cast<std::size_t>(letter - 1)];
    }
    return Permutation(std::move(img));
}

GammaVector rep_gamma(const KSubset& K, SytVariant variant, int bound) {
    const int n = K.n;
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
    require_bound(n, bound);
    const Composition mu = composition_mu(K);
    std::vector<std::int64_t> entries(static_cast<std::size_t>((n - 1) / 2 + 1), 0);
    const SytFilter filter = (variant == SytVariant::hat) ? SytFilter::hat : SytFilter::tilde;
    for (const Partition& shape : partitions_of(n)) {
        const std::int64_t weight = kostka(shape, mu);
        if (weight == 0) continue;
        for (const YoungTableau& q : enumerate_syt(shape, filter)) {
            const int j = tableau_descent_count(q);
            if (j >= static_cast<int>(entries.size())) {
                throw std::logic_error("tableau descent count escaped the gamma range");
            }
            entries[static_cast<std::size_t>(j)] =
                checked_add(entries[static_cast<std::size_t>(j)], weight);
        }
    }
    return GammaVector(std::move(entries), n - 1);
}

std::string to_string(const YoungTableau& t) {
    std::string out = "[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (r > 0) out += ',';
        out += '[';
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c > 0) out += ',';
            out += std::to_string(t.rows[r][c]);
        }
        out += ']';
    }
    out += ']';
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int p = 0;
        try {
            p = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition entry '" + tok + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("malformed partition entry '" + tok + "'");
        parts.push_back(p);
    }
    return Partition(std::move(parts));
}

}  // namespace pperm
