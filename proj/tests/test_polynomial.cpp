#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pperm/polynomial.hpp"

using namespace pperm;

TEST_CASE("f to h") {
    // A 4-gon.
    CHECK(f_to_h(IntPolynomial({4, 4, 1}), 2) == IntPolynomial({1, 2, 1}));
    // A point.
    CHECK(f_to_h(IntPolynomial({1}), 0) == IntPolynomial({1}));
    // A segment.
    CHECK(f_to_h(IntPolynomial({2, 1}), 1) == IntPolynomial({1, 1}));
    CHECK_THROWS_AS(f_to_h(IntPolynomial({1, 1, 1}), 1), std::invalid_argument);
}

TEST_CASE("palindromicity") {
    CHECK(is_palindromic(IntPolynomial({1, 14, 30, 14, 1}), 4));
    CHECK_FALSE(is_palindromic(IntPolynomial({1, 2}), 2));
    for (int d = 0; d <= 8; ++d) {
        CHECK(is_palindromic(binomial_power(d), d));
    }
    // Trailing zeros matter: 1+t is palindromic for d=1 but not d=2.
    CHECK(is_palindromic(IntPolynomial({1, 1}), 1));
    CHECK_FALSE(is_palindromic(IntPolynomial({1, 1}), 2));
}

TEST_CASE("gamma expansion") {
    const GammaVector g = gamma_expand(IntPolynomial({1, 14, 30, 14, 1}), 4);
    CHECK(g.entries == std::vector<std::int64_t>{1, 10, 4});
    CHECK(g.degree == 4);

    for (int d = 0; d <= 8; ++d) {
        const GammaVector unit = gamma_expand(binomial_power(d), d);
        CHECK(unit.entries[0] == 1);
        for (std::size_t j = 1; j < unit.entries.size(); ++j) CHECK(unit.entries[j] == 0);
    }

    CHECK(gamma_expand(IntPolynomial({1, 4, 1}), 2).entries ==
          std::vector<std::int64_t>{1, 2});

    CHECK_THROWS_AS(gamma_expand(IntPolynomial({1, 2}), 2), std::invalid_argument);
}

TEST_CASE("gamma reconstruction") {
    CHECK(gamma_reconstruct(GammaVector({1, 10, 4}, 4)) ==
          IntPolynomial({1, 14, 30, 14, 1}));
    CHECK(gamma_reconstruct(GammaVector({1}, 0)) == IntPolynomial({1}));
    CHECK(gamma_reconstruct(GammaVector({1, 2}, 2)) == IntPolynomial({1, 4, 1}));

    // Negative entries are legal for general palindromic input.
    const GammaVector neg({1, -3}, 2);
    CHECK(gamma_expand(gamma_reconstruct(neg), 2) == neg);
}

TEST_CASE("expand is a left inverse of reconstruct") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<std::int64_t> entry(-1000000, 1000000);
    std::uniform_int_distribution<int> degree(0, 12);
    for (int trial = 0; trial < 500; ++trial) {
        const int d = degree(rng);
        std::vector<std::int64_t> entries(static_cast<std::size_t>(d / 2 + 1));
        for (auto& e : entries) e = entry(rng);
        const GammaVector g(entries, d);
        CHECK(gamma_expand(gamma_reconstruct(g), d) == g);
    }
}

TEST_CASE("arithmetic") {
    const IntPolynomial a({1, 2});
    const IntPolynomial b({0, 1, 1});
    CHECK(a + b == IntPolynomial({1, 3, 1}));
    CHECK(a - b == IntPolynomial({1, 1, -1}));
    CHECK(a * b == IntPolynomial({0, 1, 3, 2}));
    CHECK(IntPolynomial({1, 2, 1})(1) == 4);
    CHECK(IntPolynomial({1, 2, 1})(10) == 121);
    CHECK(IntPolynomial({1, 0}) == IntPolynomial({1}));  // trailing zeros ignored
    CHECK(shift_up(IntPolynomial({1, 1}), 2) == IntPolynomial({0, 0, 1, 1}));
    CHECK(binomial_power(4) == IntPolynomial({1, 4, 6, 4, 1}));
}

TEST_CASE("overflow is an error, never a wrap") {
    CHECK_THROWS_AS(binomial_power(70), std::overflow_error);
    const IntPolynomial big({std::int64_t{1} << 62});
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_THROWS_AS(big * IntPolynomial({4}), std::overflow_error);
}

TEST_CASE("gamma vector shape validation") {
    CHECK_THROWS_AS(GammaVector({1, 2, 3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(GammaVector({1}, -1), std::invalid_argument);
}
