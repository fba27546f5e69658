#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "pperm/word.hpp"

using namespace pperm;

namespace {

// Brute-force descent oracle, independent of descent_set.
std::vector<int> naive_descents(const std::vector<int>& letters) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        if (letters[i] > letters[i + 1]) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    do {
        fn(Permutation{std::vector<int>(img)});
    } while (std::next_permutation(img.begin(), img.end()));
}

}  // namespace

TEST_CASE("descent set") {
    CHECK(descent_set(parse_word("4223185")) == std::vector<int>{1, 4, 6});
    CHECK(descent_set(parse_word("1234567")) == std::vector<int>{});
    CHECK(descent_set(parse_word("21345")) == std::vector<int>{1});
    CHECK(descent_count(parse_word("4223185")) == 3);

    // Words and permutations agree.
    for_each_permutation(5, [](const Permutation& w) {
        CHECK(descent_set(w) == descent_set(w.as_word()));
        CHECK(descent_set(w) == naive_descents(w.image));
    });
}

TEST_CASE("descent flags") {
    auto f = descent_flags(parse_word("4223185"));
    CHECK_FALSE(f.double_descent);
    CHECK(f.initial_descent);
    CHECK(f.final_descent);

    f = descent_flags(parse_word("321"));
    CHECK(f.double_descent);
    CHECK(f.initial_descent);
    CHECK(f.final_descent);

    f = descent_flags(parse_word("13254"));
    CHECK_FALSE(f.double_descent);
    CHECK_FALSE(f.initial_descent);
    CHECK(f.final_descent);

    CHECK(is_tilde(parse_word("13254")));
    CHECK_FALSE(is_hat(parse_word("13254")));
}

TEST_CASE("position classification of the running example") {
    const Permutation w = parse_permutation("672841359");
    const PositionClass pc = classify_positions(w);

    auto values_of = [&](PositionKind k) {
        std::vector<int> vals;
        for (int pos : pc.positions(k)) vals.push_back(w.at(pos));
        std::sort(vals.begin(), vals.end());
        return vals;
    };
    CHECK(values_of(PositionKind::peak) == std::vector<int>{7, 8});
    CHECK(values_of(PositionKind::valley) == std::vector<int>{1, 2, 6});
    CHECK(values_of(PositionKind::free_down) == std::vector<int>{4});
    CHECK(values_of(PositionKind::free_up) == std::vector<int>{3, 5, 9});

    CHECK(descent_set(w) == std::vector<int>{2, 4, 5});
    CHECK(descent_count(w) == pc.count(PositionKind::peak) + pc.count(PositionKind::free_down));
}

TEST_CASE("increasing permutation classification") {
    const PositionClass pc = classify_positions(parse_permutation("12345"));
    CHECK(pc.count(PositionKind::peak) == 0);
    CHECK(pc.count(PositionKind::valley) == 1);
    CHECK(pc.at(1) == PositionKind::valley);
    CHECK(pc.count(PositionKind::free_up) == 4);
}

TEST_CASE("classification invariants hold across S_n") {
    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n, [&](const Permutation& w) {
            const PositionClass pc = classify_positions(w);
            const int peaks = pc.count(PositionKind::peak);
            CHECK(pc.count(PositionKind::valley) == peaks + 1);
            CHECK(pc.count(PositionKind::free_up) + pc.count(PositionKind::free_down) ==
                  n - 1 - 2 * peaks);
            CHECK(descent_count(w) == peaks + pc.count(PositionKind::free_down));
        });
    }
    CHECK(classify_positions(Permutation::identity(0)).size() == 0);
    CHECK(classify_positions(Permutation::identity(1)).at(1) == PositionKind::valley);
}

TEST_CASE("star involution") {
    CHECK(star(parse_permutation("12345")) == parse_permutation("12345"));
    CHECK(star(parse_permutation("21345")) == parse_permutation("12354"));

    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n, [&](const Permutation& w) {
            CHECK(star(star(w)) == w);
            std::vector<int> expected;
            for (int i : descent_set(w)) expected.push_back(n - i);
            std::sort(expected.begin(), expected.end());
            CHECK(descent_set(star(w)) == expected);
        });
    }
}

TEST_CASE("coxeter length is the inversion count") {
    CHECK(coxeter_length(Permutation::identity(6)) == 0);
    CHECK(coxeter_length(parse_permutation("54321")) == 10);
    CHECK(coxeter_length(parse_permutation("13254")) == 2);
}

TEST_CASE("text forms") {
    CHECK(to_string(parse_permutation("672841359")) == "6 7 2 8 4 1 3 5 9");
    CHECK(parse_permutation("6 7 2 8 4 1 3 5 9") == parse_permutation("672841359"));
    CHECK(parse_word("12 3 4").letters == std::vector<int>{12, 3, 4});
    CHECK(parse_word("").size() == 0);
    CHECK(to_string(parse_word("4223185")) == "4 2 2 3 1 8 5");

    CHECK_THROWS_AS(parse_word("102"), std::invalid_argument);  // 0 is not a letter
    CHECK_THROWS_AS(parse_word("1 0 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1 x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1 2 2"), std::invalid_argument);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(Word({1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK(Word().size() == 0);
    CHECK(descent_set(Word()) == std::vector<int>{});
    CHECK(Permutation::identity(1).at(1) == 1);
    CHECK(parse_word("4223185").multiplicity(2) == 2);
    CHECK(parse_word("4223185").multiplicity(8) == 1);
    CHECK(parse_word("4223185").multiplicity(6) == 0);
}
