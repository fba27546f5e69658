#include "pperm/theta.hpp"

#include <algorithm>
#include <stdexcept>

#include "pperm/hopping.hpp"

namespace pperm {

namespace {

void require_rank(const Permutation& p, const KSubset& K) {
    if (p.size() != K.n) {
        throw std::invalid_argument("rank mismatch between permutation and K");
    }
}

// One increasing sweep of j_single over K, optionally recording which
// indices changed the permutation.
Permutation sweep(const Permutation& u, const KSubset& K, std::vector<int>* active,
                  ThetaTrace* trace) {
    Permutation cur = u;
    for (int k : K.members) {
        Permutation next = j_single(cur, k);
        if (!(next == cur)) {
            if (active) active->push_back(k);
            if (trace) trace->steps.emplace_back("J_" + std::to_string(k), next);
            cur = std::move(next);
        }
    }
    return cur;
}

}  // namespace

std::string trace_to_json(const ThetaTrace& trace) {
    std::string out = "[";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        if (i > 0) out += ',';
        out += "{\"op\":\"" + trace.steps[i].first + "\",\"result\":\"" +
               to_string(trace.steps[i].second) + "\"}";
    }
    out += ']';
    return out;
}

Permutation j_single(const Permutation& u, int k) {
    if (k < 1 || k > u.size() - 1) {
        throw std::invalid_argument("index k must lie in [1, n-1]");
    }
    const int pk = u.position_of(k);
    const int pk1 = u.position_of(k + 1);
    if (pk < pk1 || pk == pk1 + 1) return u;

    std::vector<int> img = u.image;
    img.erase(img.begin() + (pk1 - 1));
    // After the erase, k sits at 0-based index pk-2; k+1 goes immediately
    // before it.
    img.insert(img.begin() + (pk - 2), k + 1);
    return Permutation(std::move(img));
}

Permutation j_full(const Permutation& u, const KSubset& K, ThetaTrace* trace) {
    require_rank(u, K);
    return sweep(u, K, nullptr, trace);
}

EffectiveExpression effective_expression(const Permutation& u, const KSubset& K) {
    require_rank(u, K);
    std::vector<int> active;
    const Permutation result = sweep(u, K, &active, nullptr);

    EffectiveExpression expr;
    for (std::size_t i = 0; i < active.size();) {
        std::size_t j = i;
        while (j + 1 < active.size() && active[j + 1] == active[j] + 1) ++j;
        expr.intervals.push_back({active[i], active[j]});
        i = j + 1;
    }

    // Replaying just the grouped runs must land on the same permutation.
    Permutation replay = u;
    for (const IndexInterval& run : expr.intervals) {
        for (int k = run.lo; k <= run.hi; ++k) replay = j_single(replay, k);
    }
    if (!(replay == result)) {
        throw std::logic_error("grouped runs fail to reproduce the full sweep");
    }

    // Whenever lo-1 ends up immediately after lo, lo-1 cannot be in K. This
    // holds for every (w, u) in the theta domain; a violation means the
    // input is outside it.
    const std::vector<int> pos = result.inverse_positions();
    for (const IndexInterval& run : expr.intervals) {
        if (run.lo >= 2 &&
            pos[static_cast<std::size_t>(run.lo - 2)] ==
                pos[static_cast<std::size_t>(run.lo - 1)] + 1 &&
            K.contains(run.lo - 1)) {
            throw std::domain_error("input lies outside the theta domain: " +
                                    std::to_string(run.lo - 1) +
                                    " immediately follows " + std::to_string(run.lo));
        }
    }
    return expr;
}

std::vector<PeakString> extract_strings(const Permutation& v, const KSubset& K) {
    require_rank(v, K);
    if (!is_in_w_of_k(v, K)) {
        throw std::invalid_argument("extract_strings requires v in W(K)");
    }
    const int n = v.size();
    const PositionClass pc = classify_positions(v);
    std::vector<PeakString> strings;
    for (int c = 1; c <= n; ++c) {
        if (pc.at(c) != PositionKind::peak) continue;
        const int peak = v.at(c);
        int len = 0;
        while (c + len + 1 <= n && v.at(c + len + 1) == peak - len - 1 &&
               K.contains(peak - len - 1)) {
            ++len;
        }
        if (len == 0) continue;
        const int low = peak - len;
        // Greedy extension already enforces the boundary rule: if low-1
        // immediately follows low, the extension stopped because low-1 is
        // outside K.
        if (low >= 2 && c + len + 1 <= n && v.at(c + len + 1) == low - 1 &&
            K.contains(low - 1)) {
            throw std::logic_error("peak string extension stopped early");
        }
        strings.push_back({peak, low, c});
    }
    std::sort(strings.begin(), strings.end(),
              [](const PeakString& a, const PeakString& b) { return a.low < b.low; });
    return strings;
}

Permutation l_full(const Permutation& v, const KSubset& K, ThetaTrace* trace) {
    std::vector<PeakString> strings = extract_strings(v, K);  // validates v in W(K)
    Permutation cur = v;
    for (auto it = strings.rbegin(); it != strings.rend(); ++it) {
        const int peak = it->peak;
        const int low = it->low;
        const int len = it->length();
        const int c = cur.position_of(peak);
        for (int off = 1; off <= len; ++off) {
            if (cur.at(c + off) != peak - off) {
                throw std::logic_error("peak string was disturbed by an earlier splice");
            }
        }
        // Largest a < c whose letter exceeds the peak; 0 means the front.
        int a = 0;
        for (int p = c - 1; p >= 1; --p) {
            if (cur.at(p) > peak) {
                a = p;
                break;
            }
        }
        std::vector<int> img;
        img.reserve(static_cast<std::size_t>(cur.size()));
        for (int p = 1; p <= a; ++p) img.push_back(cur.at(p));
        for (int x = peak; x >= low + 1; --x) img.push_back(x);
        for (int p = a + 1; p <= c - 1; ++p) img.push_back(cur.at(p));
        img.push_back(low);
        for (int p = c + len + 1; p <= cur.size(); ++p) img.push_back(cur.at(p));
        cur = Permutation(std::move(img));
        if (trace) {
            trace->steps.emplace_back(
                "L_[" + std::to_string(low) + "," + std::to_string(peak - 1) + "]", cur);
        }
    }
    return cur;
}

Permutation theta(const Permutation& w, const Permutation& u, const KSubset& K) {
    require_rank(w, K);
    require_rank(u, K);
    if (!is_min_rep(w, K) || !is_tilde(w)) {
        throw std::invalid_argument("theta requires w in the tilde minimal representatives");
    }
    if (!(canonical_rep(u) == w)) {
        throw std::invalid_argument("theta requires u in the hop class of w");
    }
    return j_full(u, K);
}

std::pair<Permutation, Permutation> theta_inverse(const Permutation& v, const KSubset& K) {
    Permutation u = l_full(v, K);  // validates v in W(K)
    Permutation w = canonical_rep(u);
    return {std::move(w), std::move(u)};
}

}  // namespace pperm
