#include "pperm/word.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pperm {

Word::Word(std::vector<int> ls) : letters(std::move(ls)) {
    for (int x : letters) {
        if (x < 1) throw std::invalid_argument("word letters must be positive integers");
    }
}

int Word::multiplicity(int letter) const {
    return static_cast<int>(std::count(letters.begin(), letters.end(), letter));
}

Permutation::Permutation(std::vector<int> img) : image(std::move(img)) {
    const int n = static_cast<int>(image.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int x : image) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)]) {
            throw std::invalid_argument("one-line notation must list each of 1..n exactly once");
        }
        seen[static_cast<std::size_t>(x - 1)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("rank must be nonnegative");
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(img));
}

int Permutation::position_of(int value) const {
    if (value < 1 || value > size()) throw std::invalid_argument("value out of range");
    for (int i = 0; i < size(); ++i) {
        if (image[static_cast<std::size_t>(i)] == value) return i + 1;
    }
    throw std::logic_error("permutation image is corrupt");
}

std::vector<int> Permutation::inverse_positions() const {
    std::vector<int> pos(image.size());
    for (int i = 0; i < size(); ++i) {
        pos[static_cast<std::size_t>(image[static_cast<std::size_t>(i)] - 1)] = i + 1;
    }
    return pos;
}

int PositionClass::count(PositionKind k) const {
    return static_cast<int>(std::count(kinds.begin(), kinds.end(), k));
}

std::vector<int> PositionClass::positions(PositionKind k) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        if (kinds[static_cast<std::size_t>(i)] == k) out.push_back(i + 1);
    }
    return out;
}

std::vector<int> descent_set(const Word& v) {
    std::vector<int> out;
    for (int i = 1; i < v.size(); ++i) {
        if (v.at(i) > v.at(i + 1)) out.push_back(i);
    }
    return out;
}

int descent_count(const Word& v) { return static_cast<int>(descent_set(v).size()); }

DescentFlags descent_flags(const Word& v) {
    const int n = v.size();
    DescentFlags f;
    bool prev_descent = false;
    for (int i = 1; i <= n - 1; ++i) {
        const bool d = v.at(i) > v.at(i + 1);
        if (d && i == 1) f.initial_descent = true;
        if (d && i == n - 1) f.final_descent = true;
        if (d && prev_descent) f.double_descent = true;
        prev_descent = d;
    }
    return f;
}

bool is_tilde(const Word& v) {
    const DescentFlags f = descent_flags(v);
    return !f.double_descent && !f.initial_descent;
}

bool is_hat(const Word& v) {
    const DescentFlags f = descent_flags(v);
    return !f.double_descent && !f.final_descent;
}

PositionClass classify_positions(const Permutation& w) {
    const int n = w.size();
    constexpr int kInf = std::numeric_limits<int>::max();
    PositionClass pc;
    pc.kinds.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int left = (i == 1) ? kInf : w.at(i - 1);
        const int cur = w.at(i);
        const int right = (i == n) ? kInf : w.at(i + 1);
        PositionKind k;
        if (left < cur && cur > right) k = PositionKind::peak;
        else if (left > cur && cur < right) k = PositionKind::valley;
        else if (left > cur && cur > right) k = PositionKind::free_down;
        else k = PositionKind::free_up;
        pc.kinds.push_back(k);
    }
    return pc;
}

int peak_count(const Permutation& w) {
    return classify_positions(w).count(PositionKind::peak);
}

Permutation star(const Permutation& w) {
    const int n = w.size();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        img[static_cast<std::size_t>(i - 1)] = n + 1 - w.at(n + 1 - i);
    }
    return Permutation(std::move(img));
}

long long coxeter_length(const Permutation& w) {
    long long inv = 0;
    for (int i = 1; i <= w.size(); ++i) {
        for (int j = i + 1; j <= w.size(); ++j) {
            if (w.at(i) > w.at(j)) ++inv;
        }
    }
    return inv;
}

namespace {

std::string join_letters(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<int> parse_letters(const std::string& text) {
    const bool spaced = text.find_first_of(" \t") != std::string::npos;
    std::vector<int> letters;
    if (spaced) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("cannot parse letter '" + tok + "'");
            }
            if (used != tok.size() || value < 1) {
                throw std::invalid_argument("cannot parse letter '" + tok + "'");
            }
            letters.push_back(value);
        }
    } else {
        // Compact form: one digit per letter, valid only for letters 1..9.
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument(
                    "compact form allows digits 1-9 only; use space-separated letters");
            }
            letters.push_back(c - '0');
        }
    }
    return letters;
}

}  // namespace

std::string to_string(const Word& v) { return join_letters(v.letters); }
std::string to_string(const Permutation& w) { return join_letters(w.image); }

Word parse_word(const std::string& text) { return Word(parse_letters(text)); }

Permutation parse_permutation(const std::string& text) {
    return Permutation(parse_letters(text));
}

}  // namespace pperm
