#include <catch2/catch_amalgamated.hpp>

#include "diagharm/permutation.hpp"
#include "diagharm/qpolynomial.hpp"

using namespace diagharm;

TEST_CASE("descents and maj") {
    Permutation sigma{4, 2, 5, 1, 3, 8, 6, 7, 9};
    CHECK(descents(sigma) == std::vector<int>{1, 3, 6});
    CHECK(maj(sigma) == 10);
    CHECK(descents(Permutation{1, 2, 3}).empty());
    CHECK(maj(Permutation{3, 2, 1}) == 3);
    CHECK(descents(Permutation{1}).empty());
}

TEST_CASE("increasing runs partition the positions") {
    Permutation sigma{4, 2, 5, 1, 3, 8, 6, 7, 9};
    std::vector<std::pair<int, int>> expect{{1, 1}, {2, 3}, {4, 6}, {7, 9}};
    CHECK(runs(sigma) == expect);
    CHECK(runs(Permutation{1, 2, 3}) == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK(runs(Permutation{2, 1}) == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});
}

TEST_CASE("weight sequence of the running example") {
    Permutation sigma{4, 2, 5, 1, 3, 8, 6, 7, 9};
    CHECK(wseq(sigma) == std::vector<int>{1, 2, 2, 2, 1, 2, 3, 2, 1});
}

TEST_CASE("identity permutation has weights n..1") {
    for (int n = 1; n <= 7; ++n) {
        Permutation id(static_cast<std::size_t>(n));
        std::iota(id.begin(), id.end(), 1);
        std::vector<int> w = wseq(id);
        for (int i = 1; i <= n; ++i)
            CHECK(w[static_cast<std::size_t>(i) - 1] == n - i + 1);
    }
}

TEST_CASE("weights past the last descent count down to 1") {
    iter_permutations(6, [](const Permutation& sigma) {
        std::vector<int> d = descents(sigma);
        int sd = d.empty() ? 0 : d.back();
        std::vector<int> w = wseq(sigma);
        for (int i = sd + 1; i <= 6; ++i)
            REQUIRE(w[static_cast<std::size_t>(i) - 1] == 6 - i + 1);
    });
}

TEST_CASE("weights are positive and run-compatible") {
    iter_permutations(6, [](const Permutation& sigma) {
        std::vector<int> w = wseq(sigma);
        for (auto [start, end] : runs(sigma))
            for (int i = start; i <= end; ++i) {
                REQUIRE(w[static_cast<std::size_t>(i) - 1] >= 1);
                if (i < end)
                    REQUIRE(w[static_cast<std::size_t>(i) - 1] <= w[static_cast<std::size_t>(i)] + 1);
            }
    });
}

TEST_CASE("maj generating function is the q-factorial") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<BigInt> counts(static_cast<std::size_t>(n * (n - 1) / 2) + 1, BigInt(0));
        iter_permutations(n, [&](const Permutation& sigma) {
            counts[static_cast<std::size_t>(maj(sigma))] += 1;
        });
        CHECK(QPolynomial(counts) == q_factorial(n));
    }
}

TEST_CASE("iter_permutations is exhaustive and lexicographic") {
    int count = 0;
    Permutation prev;
    iter_permutations(4, [&](const Permutation& sigma) {
        if (!prev.empty()) REQUIRE(prev < sigma);
        prev = sigma;
        ++count;
    });
    CHECK(count == 24);
}
