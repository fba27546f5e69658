#pragma once

#include <string>
#include <vector>

namespace pperm {

// A finite sequence of positive integers. Positions are 1-based in every
// public contract; lengths 0 and 1 are legal and all statistics are empty
// there.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls);

    int size() const { return static_cast<int>(letters.size()); }
    int at(int pos) const { return letters.at(static_cast<std::size_t>(pos - 1)); }
    int multiplicity(int letter) const;

    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const { return letters < o.letters; }
};

// An element of S_n in one-line notation w(1) ... w(n). A permutation is a
// word whose letters are exactly 1..n.
struct Permutation {
    std::vector<int> image;

    Permutation() = default;
    explicit Permutation(std::vector<int> img);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(image.size()); }
    int at(int pos) const { return image.at(static_cast<std::size_t>(pos - 1)); }
    int position_of(int value) const;
    std::vector<int> inverse_positions() const;  // entry value-1 holds the position of value

    Word as_word() const { return Word(image); }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return image < o.image; }
};

// Local shape of each position under the sentinel convention
// w(0) = w(n+1) = +infinity, so position 1 and position n are never peaks.
enum class PositionKind { peak, valley, free_up, free_down };

struct PositionClass {
    std::vector<PositionKind> kinds;  // kinds[i-1] labels position i

    int size() const { return static_cast<int>(kinds.size()); }
    PositionKind at(int pos) const { return kinds.at(static_cast<std::size_t>(pos - 1)); }
    int count(PositionKind k) const;
    std::vector<int> positions(PositionKind k) const;  // 1-based, ascending
};

struct DescentFlags {
    bool double_descent = false;   // some {i, i+1} both descents
    bool initial_descent = false;  // 1 is a descent
    bool final_descent = false;    // n-1 is a descent
};

std::vector<int> descent_set(const Word& v);  // {i in [n-1] : v(i) > v(i+1)}, ascending
int descent_count(const Word& v);
DescentFlags descent_flags(const Word& v);

inline std::vector<int> descent_set(const Permutation& w) { return descent_set(w.as_word()); }
inline int descent_count(const Permutation& w) { return descent_count(w.as_word()); }
inline DescentFlags descent_flags(const Permutation& w) { return descent_flags(w.as_word()); }

// No double descent and no initial descent.
bool is_tilde(const Word& v);
// No double descent and no final descent.
bool is_hat(const Word& v);
inline bool is_tilde(const Permutation& w) { return is_tilde(w.as_word()); }
inline bool is_hat(const Permutation& w) { return is_hat(w.as_word()); }

PositionClass classify_positions(const Permutation& w);
int peak_count(const Permutation& w);

// The involution w*(i) = n+1-w(n+1-i). Des(star(w)) = { n-i : i in Des(w) }.
Permutation star(const Permutation& w);

// Inversion count, the Coxeter length in type A.
long long coxeter_length(const Permutation& w);

// Canonical text form: letters joined by single spaces. Input also accepts a
// compact digit string for words with letters <= 9.
std::string to_string(const Word& v);
std::string to_string(const Permutation& w);
Word parse_word(const std::string& text);
Permutation parse_permutation(const std::string& text);

}  // namespace pperm
