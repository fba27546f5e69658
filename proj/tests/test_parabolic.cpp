#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pperm/checked.hpp"
#include "pperm/parabolic.hpp"

using namespace pperm;

namespace {

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    do {
        fn(Permutation{std::vector<int>(img)});
    } while (std::next_permutation(img.begin(), img.end()));
}

std::vector<std::string> names(const std::vector<Permutation>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(to_string(w));
    return out;
}

}  // namespace

TEST_CASE("orbits and mu") {
    const KSubset K(7, {2, 3, 4, 6});
    CHECK(orbits(K) == std::vector<std::pair<int, int>>{{1, 1}, {2, 5}, {6, 7}});
    CHECK(composition_mu(K).parts == std::vector<int>{1, 4, 2});

    CHECK(orbits(KSubset(3, {})) ==
          std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}});
    CHECK(composition_mu(KSubset(3, {})).parts == std::vector<int>{1, 1, 1});

    CHECK(orbits(KSubset(4, {1, 2, 3})) == std::vector<std::pair<int, int>>{{1, 4}});
    CHECK(composition_mu(KSubset(4, {1, 2, 3})).parts == std::vector<int>{4});
}

TEST_CASE("KSubset validation and intervals") {
    CHECK_THROWS_AS(KSubset(5, {0}), std::invalid_argument);
    CHECK_THROWS_AS(KSubset(5, {5}), std::invalid_argument);
    CHECK_THROWS_AS(KSubset(5, {2, 2}), std::invalid_argument);
    CHECK(KSubset(5, {3, 1}).members == std::vector<int>{1, 3});  // sorted on input
    CHECK(KSubset(9, {2, 3, 4, 6, 7, 8}).intervals() ==
          std::vector<std::pair<int, int>>{{2, 4}, {6, 8}});
    CHECK(KSubset(5, {}).intervals().empty());
}

TEST_CASE("minimal representative test") {
    CHECK(is_min_rep(parse_permutation("13254"), KSubset(5, {1, 3})));
    CHECK_FALSE(is_min_rep(parse_permutation("21345"), KSubset(5, {1})));
    CHECK(is_min_rep(Permutation::identity(6), KSubset(6, {2, 3, 5})));
    CHECK_THROWS_AS(is_min_rep(Permutation::identity(4), KSubset(5, {1})),
                    std::invalid_argument);
}

TEST_CASE("W(K) membership") {
    CHECK(is_in_w_of_k(parse_permutation("132"), KSubset(3, {1, 2})));
    CHECK_FALSE(is_in_w_of_k(parse_permutation("312"), KSubset(3, {2})));
    CHECK(is_in_w_of_k(Permutation::identity(5), KSubset(5, {1, 2, 3, 4})));
}

TEST_CASE("enumerations for n=5, K={1,3}") {
    const KSubset K(5, {1, 3});
    CHECK(enumerate_w_upper_k(K, MinRepFilter::all).size() == 30);

    const auto tilde = enumerate_w_upper_k(K, MinRepFilter::tilde);
    const std::vector<std::string> expected{
        "1 2 3 4 5", "1 2 3 5 4", "1 2 5 3 4", "1 3 2 4 5", "1 3 2 5 4",
        "1 3 4 2 5", "1 3 4 5 2", "1 3 5 2 4", "1 5 2 3 4", "1 5 3 4 2",
        "3 4 1 2 5", "3 4 1 5 2", "3 4 5 1 2", "3 5 1 2 4", "3 5 1 4 2"};
    CHECK(names(tilde) == expected);

    CHECK(enumerate_w_upper_k(K, MinRepFilter::hat).size() == 15);
    CHECK(enumerate_w_of_k(K).size() == 60);
}

TEST_CASE("small coset and W(K) sets") {
    CHECK(names(enumerate_w_upper_k(KSubset(3, {1, 2}), MinRepFilter::tilde)) ==
          std::vector<std::string>{"1 2 3"});
    CHECK(names(enumerate_w_of_k(KSubset(3, {1, 2}))) ==
          std::vector<std::string>{"1 2 3", "1 3 2", "2 1 3", "3 2 1"});
    CHECK(names(enumerate_w_of_k(KSubset(2, {}))) ==
          std::vector<std::string>{"1 2", "2 1"});
}

TEST_CASE("k_star") {
    CHECK(k_star(KSubset(5, {1, 3})).members == std::vector<int>{2, 4});
    CHECK(k_star(KSubset(4, {})).members.empty());
    CHECK(k_star(KSubset(6, {1, 2, 5})).members == std::vector<int>{1, 4, 5});
    for (int n = 2; n <= 6; ++n) {
        for (const KSubset& K : all_k_subsets(n)) {
            CHECK(k_star(k_star(K)) == K);
        }
    }
}

TEST_CASE("index of the parabolic") {
    for (int n = 1; n <= 7; ++n) {
        for (const KSubset& K : all_k_subsets(n)) {
            std::int64_t expected = checked_factorial(n);
            for (int part : composition_mu(K).parts) expected /= checked_factorial(part);
            CHECK(static_cast<std::int64_t>(
                      enumerate_w_upper_k(K, MinRepFilter::all).size()) == expected);
        }
    }
}

TEST_CASE("each left coset holds exactly one minimal representative") {
    for (int n = 1; n <= 6; ++n) {
        for (const KSubset& K : all_k_subsets(n)) {
            // The coset of w is determined by which orbit each position's
            // value falls in.
            std::vector<int> orbit_of(static_cast<std::size_t>(n));
            int orbit_index = 0;
            for (const auto& [a, b] : orbits(K)) {
                for (int v = a; v <= b; ++v) orbit_of[static_cast<std::size_t>(v - 1)] = orbit_index;
                ++orbit_index;
            }
            std::map<std::vector<int>, std::pair<int, int>> cosets;  // key -> (size, min reps)
            for_each_permutation(n, [&](const Permutation& w) {
                std::vector<int> key;
                for (int i = 1; i <= n; ++i) key.push_back(orbit_of[static_cast<std::size_t>(w.at(i) - 1)]);
                auto& entry = cosets[key];
                ++entry.first;
                if (is_min_rep(w, K)) ++entry.second;
            });
            std::int64_t subgroup_order = 1;
            for (int part : composition_mu(K).parts) {
                subgroup_order = checked_mul(subgroup_order, checked_factorial(part));
            }
            for (const auto& [key, entry] : cosets) {
                CHECK(entry.first == subgroup_order);
                CHECK(entry.second == 1);
            }
        }
    }
}

TEST_CASE("star carries hat representatives onto tilde representatives of the dual") {
    for (int n = 1; n <= 6; ++n) {
        for (const KSubset& K : all_k_subsets(n)) {
            std::vector<Permutation> mapped;
            for (const Permutation& w : enumerate_w_upper_k(K, MinRepFilter::hat)) {
                const Permutation s = star(w);
                CHECK(descent_count(s) == descent_count(w));
                mapped.push_back(s);
            }
            std::sort(mapped.begin(), mapped.end());
            CHECK(mapped == enumerate_w_upper_k(k_star(K), MinRepFilter::tilde));
        }
    }
}

TEST_CASE("tilde and hat descent histograms agree") {
    for (int n = 1; n <= 6; ++n) {
        for (const KSubset& K : all_k_subsets(n)) {
            std::map<int, int> tilde_hist, hat_hist;
            for (const Permutation& w : enumerate_w_upper_k(K, MinRepFilter::tilde)) {
                ++tilde_hist[descent_count(w)];
            }
            for (const Permutation& w : enumerate_w_upper_k(K, MinRepFilter::hat)) {
                ++hat_hist[descent_count(w)];
            }
            CHECK(tilde_hist == hat_hist);
        }
    }
}

TEST_CASE("extreme subsets") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(enumerate_w_of_k(KSubset(n, {})).size() ==
              static_cast<std::size_t>(checked_factorial(n)));
        std::vector<int> full;
        for (int k = 1; k <= n - 1; ++k) full.push_back(k);
        CHECK(enumerate_w_of_k(KSubset(n, full)).size() ==
              static_cast<std::size_t>(1) << (n - 1));
    }
}

TEST_CASE("serialization") {
    CHECK(to_string(KSubset(5, {1, 3})) == "1,3");
    CHECK(to_string(KSubset(5, {})).empty());
    CHECK(parse_ksubset("1,3", 5) == KSubset(5, {1, 3}));
    CHECK(parse_ksubset("", 5) == KSubset(5, {}));
    CHECK_THROWS_AS(parse_ksubset("0", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_ksubset("5", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_ksubset("1,1", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_ksubset("1,x", 5), std::invalid_argument);
    CHECK(all_k_subsets(4).size() == 8);
    CHECK(all_k_subsets(1).size() == 1);
}

TEST_CASE("enumeration bound") {
    CHECK_THROWS_AS(enumerate_w_of_k(KSubset(6, {}), 5), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_w_upper_k(KSubset(11, {}), MinRepFilter::all),
                    std::invalid_argument);
}
