#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "diagharm/counting_state.hpp"
#include "diagharm/oracle.hpp"

using namespace diagharm;

using Catch::Matchers::ContainsSubstring;

namespace {

const CountingState kRoot{{1, 3, 5}, {1, 2, 2, 1, 3}, {5}};
const CountingState kChild{{1, 2, 4}, {1, 1, 1, 3}, {4}};

}  // namespace

TEST_CASE("attainable weight bounds") {
    std::vector<int> S{2, 4, 7};
    WBound b = w_bounds(S, 1);
    CHECK(b.min == 1);
    CHECK(b.max == 3);
    CHECK_FALSE(b.n_dependent);

    b = w_bounds(S, 2);
    CHECK(b.min == 1);
    CHECK(b.max == 2);

    b = w_bounds(S, 3);
    CHECK(b.min == 1);
    CHECK(b.max == 4);

    b = w_bounds(S, 4);
    CHECK(b.min == 1);
    CHECK(b.max == 3);

    b = w_bounds(S, 5);
    CHECK(b.min == 2);
    CHECK(b.n_dependent);

    b = w_bounds(S, 7);
    CHECK(b.min == 1);
    CHECK(b.n_dependent);

    CHECK(w_max_at_length(S, 7, 10) == 3);
    CHECK(w_max_at_length(S, 5, 10) == 5);
    CHECK(w_max_at_length(S, 1, 10) == 3);

    CHECK_THROWS_AS(w_bounds({}, 1), std::out_of_range);
    CHECK_THROWS_AS(w_bounds(S, 0), std::out_of_range);
    CHECK_THROWS_AS(w_bounds(S, 8), std::out_of_range);
}

TEST_CASE("prefix permissibility") {
    CHECK(is_permissible({2, 4, 7}, {2, 2, 3, 2, 2, 4, 3}));
    CHECK_FALSE(is_permissible({2}, {3, 1}));       // drops by two inside a run
    CHECK_FALSE(is_permissible({3}, {1, 1, 1}));    // below the floor at position 1
    CHECK(is_permissible({3}, {2, 1, 1}));
    CHECK_FALSE(is_permissible({1, 2}, {2, 1}));    // above the ceiling at position 1
    CHECK(is_permissible({1, 2}, {1, 1}));
    CHECK_FALSE(is_permissible({4}, {4, 2, 2, 1}));  // run condition
    CHECK(is_permissible({4}, {3, 2, 2, 1}));
    CHECK(is_permissible({}, {}));
    CHECK_THROWS_AS(is_permissible({2}, {1}), std::invalid_argument);
}

TEST_CASE("descent sets grouped by weight") {
    CHECK(descent_sets_with_maj(0) == std::vector<std::vector<int>>{{}});
    CHECK(descent_sets_with_maj(1) == std::vector<std::vector<int>>{{1}});
    CHECK(descent_sets_with_maj(3) == std::vector<std::vector<int>>{{3}, {1, 2}});
    CHECK(descent_sets_with_maj(5) == std::vector<std::vector<int>>{{5}, {1, 4}, {2, 3}});
    CHECK(descent_sets_with_maj(6) ==
          std::vector<std::vector<int>>{{6}, {1, 5}, {2, 4}, {1, 2, 3}});

    for (const auto& S : descent_sets_with_maj(9)) {
        int sum = 0;
        for (std::size_t i = 0; i < S.size(); ++i) {
            sum += S[i];
            if (i > 0) CHECK(S[i] > S[i - 1]);
        }
        CHECK(sum == 9);
    }
}

TEST_CASE("prefix enumeration for one q-degree") {
    CHECK(enumerate_permissible({1}, 0, {1}) == std::vector<std::vector<int>>{{1}});
    CHECK(enumerate_permissible({2}, 1, {}) == std::vector<std::vector<int>>{{1, 1}});
    CHECK(enumerate_permissible({}, 2, {}) == std::vector<std::vector<int>>{{}});

    // A pinned value below its floor still names a nonempty class: the
    // floor simply takes over. Dropping this one would lose every
    // permutation whose descent set is {3}.
    CHECK(enumerate_permissible({3}, 0, {1, 2, 3}) == std::vector<std::vector<int>>{{1, 1, 1}});
    CHECK(enumerate_permissible({3}, 0, {1, 2}).empty());
    CHECK(enumerate_permissible({2}, 2, {2}) ==
          std::vector<std::vector<int>>{{1, 3}, {2, 3}});
}

TEST_CASE("raised prefixes and the first member length") {
    CHECK(normalized_values(kRoot) == std::vector<int>{1, 2, 2, 1, 3});
    CHECK(first_nonzero(kRoot) == 8);

    CHECK(normalized_values(kChild) == std::vector<int>{1, 1, 1, 3});
    CHECK(first_nonzero(kChild) == 7);
    CHECK_FALSE(is_class_nonempty_at_length(kChild, 6));
    CHECK(is_class_nonempty_at_length(kChild, 7));

    CountingState all_low{{3}, {1, 1, 1}, {1, 2, 3}};
    CHECK(normalized_values(all_low) == std::vector<int>{2, 1, 1});
    CHECK(first_nonzero(all_low) == 4);

    CountingState chain{{4}, {3, 1, 1, 1}, {2}};
    CHECK(normalized_values(chain) == std::vector<int>{3, 2, 1, 1});
    CHECK(first_nonzero(chain) == 5);

    CHECK(first_nonzero(CountingState{{1, 2}, {2, 1}, {}}) == -1);
    CHECK_FALSE(is_class_nonempty(CountingState{{1, 2}, {2, 1}, {}}));
    CHECK(first_nonzero(CountingState{}) == 0);
}

TEST_CASE("spots where the largest value can sit") {
    SpotSet s = maximal_spots(kRoot);
    CHECK(s.interior == std::vector<int>{3});
    CHECK(s.at_n);

    s = maximal_spots(kChild);
    CHECK(s.interior == std::vector<int>{1, 4});
    CHECK(s.at_n);

    s = spots_at_length(kChild, 7);
    CHECK(s.interior == std::vector<int>{1, 4});
    CHECK_FALSE(s.at_n);  // at the shortest length the maximum cannot sit last
    s = spots_at_length(kChild, 8);
    CHECK(s.interior == std::vector<int>{1, 4});
    CHECK(s.at_n);

    // An exactly pinned last prefix weight opens its descent as a spot
    // only at the shortest length, where the ceiling meets the pin.
    CountingState pinned{{2}, {1, 2}, {}};
    CHECK(maximal_spots(pinned).interior.empty());
    s = spots_at_length(pinned, 4);
    CHECK(s.interior == std::vector<int>{2});
    CHECK_FALSE(s.at_n);
    s = spots_at_length(pinned, 5);
    CHECK(s.interior.empty());
    CHECK(s.at_n);

    s = maximal_spots(CountingState{});
    CHECK(s.interior.empty());
    CHECK(s.at_n);
}

TEST_CASE("descent set after deleting the maximum") {
    CHECK(phi_step(kRoot, 3) == std::vector<int>{1, 2, 4});
    CHECK(phi_step(kRoot, 9) == std::vector<int>{1, 3, 5});
    CHECK(phi_step(kChild, 1) == std::vector<int>{1, 3});
    CHECK(phi_step(kChild, 4) == std::vector<int>{1, 2});
    CHECK(phi_step(CountingState{{2}, {1, 2}, {}}, 2).empty());
}

TEST_CASE("successor classes after deleting the maximum") {
    auto next = psi_step(kRoot, 3);
    REQUIRE(next.size() == 1);
    CHECK(next[0] == kChild);

    next = psi_step(kChild, 4);
    REQUIRE(next.size() == 1);
    CHECK(next[0] == CountingState{{1, 2}, {1, 1}, {2}});

    next = psi_step(kChild, 1);
    REQUIRE(next.size() == 1);
    CHECK(next[0] == CountingState{{1, 3}, {1, 1, 3}, {3}});

    next = psi_step(kRoot, 7);
    REQUIRE(next.size() == 1);
    CHECK(next[0] == kRoot);

    // Merging two runs in the middle of the prefix lifts the earlier run
    // and demotes its pins to lower bounds.
    next = psi_step(CountingState{{2, 4}, {1, 2, 1, 2}, {}}, 2);
    REQUIRE(next.size() == 1);
    CHECK(next[0] == CountingState{{3}, {2, 1, 2}, {1}});

    // A lower-bounded weight 1 just left of the spot splits the class.
    next = psi_step(CountingState{{2}, {1, 2}, {1}}, 2);
    REQUIRE(next.size() == 2);
    CHECK(next[0] == CountingState{{1}, {1}, {1}});
    CHECK(next[1] == CountingState{});
}

TEST_CASE("moves reject positions that cannot hold the maximum") {
    CHECK_THROWS_AS(phi_step(kRoot, 5), std::invalid_argument);
    CHECK_THROWS_AS(phi_step(kRoot, 1), std::invalid_argument);
    CHECK_THROWS_AS(psi_step(kChild, 2), std::invalid_argument);
    CHECK_THROWS_WITH(psi_step(kRoot, 5), ContainsSubstring("not a maximal spot"));
}

TEST_CASE("state validation messages") {
    CHECK_THROWS_WITH(validate_state(CountingState{{2, 2}, {1, 1}, {}}),
                      ContainsSubstring("strictly increasing"));
    CHECK_THROWS_WITH(validate_state(CountingState{{2}, {1}, {}}),
                      ContainsSubstring("prefix length"));
    CHECK_THROWS_WITH(validate_state(CountingState{{2}, {1, 0}, {}}),
                      ContainsSubstring("positive"));
    CHECK_THROWS_WITH(validate_state(CountingState{{2}, {1, 1}, {3}}),
                      ContainsSubstring("lower-bound set"));
    CHECK_NOTHROW(validate_state(kRoot));
}

TEST_CASE("deleting the maximum preserves the member count") {
    // Members of length n with the maximum at a given spot correspond to
    // members of the successor class of length n-1; summed over the
    // spots available at length n this recovers the whole class.
    std::vector<CountingState> states{
        kRoot,
        kChild,
        {{3}, {2, 1, 2}, {1}},
        {{2}, {1, 2}, {}},
        {{2}, {1, 2}, {1}},
        {{4}, {3, 2, 2, 1}, {}},
    };
    for (const auto& st : states) {
        long fnz = first_nonzero(st);
        REQUIRE(fnz >= 0);
        for (int n = static_cast<int>(fnz); n <= 7; ++n) {
            BigInt via_spots = 0;
            SpotSet spots = spots_at_length(st, n);
            for (int m : spots.interior)
                for (const auto& ch : psi_step(st, m)) via_spots += count_bruteforce(ch, n - 1);
            if (spots.at_n) via_spots += count_bruteforce(st, n - 1);
            CHECK(via_spots == count_bruteforce(st, n));
        }
    }
}

TEST_CASE("exact prefixes are realizable exactly when permissible") {
    // Sweep all descent sets inside {1..4} and all prefixes with entries
    // up to 3: a permissible prefix has a witness at the shortest length
    // s_d + tau_{s_d} and none below it; a non-permissible prefix has no
    // witness at any length.
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::vector<int> S;
        for (int i = 1; i <= 4; ++i)
            if (mask & (1u << (i - 1))) S.push_back(i);
        int sd = S.back();
        std::vector<int> tau(static_cast<std::size_t>(sd), 1);
        while (true) {
            int witness_n = sd + tau[static_cast<std::size_t>(sd) - 1];
            BigInt at_first = count_bruteforce(S, tau, {}, witness_n);
            if (is_permissible(S, tau)) {
                CHECK(at_first > 0);
                CHECK(count_bruteforce(S, tau, {}, witness_n - 1) == 0);
            } else {
                CHECK(at_first == 0);
                CHECK(count_bruteforce(S, tau, {}, witness_n + 1) == 0);
            }
            std::size_t pos = 0;
            while (pos < tau.size() && tau[pos] == 3) tau[pos++] = 1;
            if (pos == tau.size()) break;
            ++tau[pos];
        }
    }
}
