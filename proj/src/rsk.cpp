#include "pperm/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace pperm {

std::pair<YoungTableau, YoungTableau> rsk(const Word& v) {
    YoungTableau p, q;
    for (int step = 1; step <= v.size(); ++step) {
        int x = v.at(step);
        std::size_t r = 0;
        while (true) {
            if (r == p.rows.size()) {
                p.rows.push_back({x});
                q.rows.push_back({step});
                break;
            }
            auto& row = p.rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                q.rows[r].push_back(step);
                break;
            }
            std::swap(*it, x);  // bump the leftmost entry greater than x
            ++r;
        }
    }
    return {std::move(p), std::move(q)};
}

Word rsk_inverse(const YoungTableau& p, const YoungTableau& q) {
    if (!is_semistandard(p) && p.boxes() > 0) {
        throw std::invalid_argument("insertion tableau is not semistandard");
    }
    if (!is_standard(q) && q.boxes() > 0) {
        throw std::invalid_argument("recording tableau is not standard");
    }
    if (!(p.shape() == q.shape())) throw std::invalid_argument("tableau shapes differ");

    const int n = q.boxes();
    std::vector<std::vector<int>> work = p.rows;
    std::vector<std::pair<int, int>> cell_of(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < q.rows.size(); ++r) {
        for (std::size_t c = 0; c < q.rows[r].size(); ++c) {
            cell_of[static_cast<std::size_t>(q.rows[r][c] - 1)] = {static_cast<int>(r),
                                                                   static_cast<int>(c)};
        }
    }

    std::vector<int> letters(static_cast<std::size_t>(n), 0);
    for (int step = n; step >= 1; --step) {
        const auto [r, c] = cell_of[static_cast<std::size_t>(step - 1)];
        if (c != static_cast<int>(work[static_cast<std::size_t>(r)].size()) - 1) {
            throw std::invalid_argument("recording labels are not removable in order");
        }
        int x = work[static_cast<std::size_t>(r)].back();
        work[static_cast<std::size_t>(r)].pop_back();
        for (int j = r - 1; j >= 0; --j) {
            auto& row = work[static_cast<std::size_t>(j)];
            // Rightmost entry strictly smaller than x.
            auto it = std::lower_bound(row.begin(), row.end(), x);
            if (it == row.begin()) {
                throw std::invalid_argument("reverse insertion found no smaller entry");
            }
            --it;
            std::swap(*it, x);
        }
        letters[static_cast<std::size_t>(step - 1)] = x;
    }
    return Word(std::move(letters));
}

YoungTableau evacuation(const YoungTableau& q) {
    if (!is_standard(q) && q.boxes() > 0) {
        throw std::invalid_argument("evacuation requires a standard tableau");
    }
    const int n = q.boxes();
    std::vector<std::vector<int>> cur = q.rows;
    YoungTableau out;
    out.rows.resize(q.rows.size());
    for (std::size_t r = 0; r < q.rows.size(); ++r) {
        out.rows[r].assign(q.rows[r].size(), 0);
    }

    // Round i: slide the hole left at (0,0) to an outer corner, free that
    // corner, and record it with label n+1-i.
    for (int round = 1; round <= n; ++round) {
        std::size_t r = 0, c = 0;
        while (true) {
            const bool has_right = c + 1 < cur[r].size();
            const bool has_down = r + 1 < cur.size() && c < cur[r + 1].size();
            if (!has_right && !has_down) break;
            if (!has_down || (has_right && cur[r][c + 1] < cur[r + 1][c])) {
                cur[r][c] = cur[r][c + 1];
                ++c;
            } else {
                cur[r][c] = cur[r + 1][c];
                ++r;
            }
        }
        out.rows[r][c] = n + 1 - round;
        cur[r].pop_back();
        if (cur[r].empty()) cur.pop_back();
    }
    return out;
}

}  // namespace pperm
