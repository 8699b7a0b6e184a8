#ifndef DIAGHARM_ORACLE_HPP
#define DIAGHARM_ORACLE_HPP

/* Independent ground truth by exhaustion, kept deliberately naive.
 *
 * Everything here answers the same questions as the closed-form layers
 * but by direct enumeration: the bigraded table from parking-function
 * statistics, descent-class sizes by scanning all of S_n, and the stable
 * polynomial recovered from raw coefficients by interpolation. The point
 * is that none of it shares code with the formulas it checks.
 */

#include "diagharm/bigint.hpp"
#include "diagharm/bivariate_series.hpp"
#include "diagharm/counting_state.hpp"
#include "diagharm/dimension_polynomial.hpp"
#include "diagharm/parking.hpp"
#include "diagharm/permutation.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diagharm {

// Sum of q^dinv t^area over all parking functions of size n.
inline BivariateSeries hilbert_parking(int n) {
    BivariateSeries out;
    if (n <= 0) {
        out.add(0, 0, 1);
        return out;
    }
    int top = n * (n - 1) / 2;
    std::vector<std::vector<std::int64_t>> grid(
        static_cast<std::size_t>(top) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(top) + 1, 0));
    iter_parking_functions(n, [&](const ParkingWord& p) {
        ParkingStats st = pf_stats(p);
        ++grid[static_cast<std::size_t>(st.dinv)][static_cast<std::size_t>(st.area)];
    });
    for (int q = 0; q <= top; ++q)
        for (int t = 0; t <= top; ++t)
            if (grid[static_cast<std::size_t>(q)][static_cast<std::size_t>(t)] != 0)
                out.add(q, t, BigInt(grid[static_cast<std::size_t>(q)][static_cast<std::size_t>(t)]));
    return out;
}

namespace detail {

// All weight sequences of S_n, bucketed by exact descent set. Built once
// per n and reused across the many (tau, U) queries a sweep makes.
inline const std::vector<std::vector<int>>& descent_bucket(int n, const std::vector<int>& S) {
    static std::map<int, std::map<std::vector<int>, std::vector<std::vector<int>>>> cache;
    static const std::vector<std::vector<int>> empty_bucket;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, std::map<std::vector<int>, std::vector<std::vector<int>>>{}).first;
        iter_permutations(n, [&](const Permutation& sigma) {
            it->second[descents(sigma)].push_back(wseq(sigma));
        });
    }
    auto bucket = it->second.find(S);
    return bucket == it->second.end() ? empty_bucket : bucket->second;
}

}  // namespace detail

// |{sigma in S_n : descent set exactly S, w agreeing with tau on the
// prefix, ">= tau" at positions in U}| by direct scan.
inline long count_bruteforce(const std::vector<int>& S, const std::vector<int>& tau,
                             const std::vector<int>& U, int n) {
    int sd = S.empty() ? 0 : S.back();
    if (static_cast<int>(tau.size()) != sd)
        throw std::invalid_argument("prefix length must equal the last descent position");
    if (sd > 0 && sd >= n) return 0;  // descents live at 1..n-1
    long count = 0;
    for (const std::vector<int>& w : detail::descent_bucket(n, S)) {
        bool match = true;
        for (int i = 1; i <= sd && match; ++i) {
            bool lower_only = std::binary_search(U.begin(), U.end(), i);
            int have = w[static_cast<std::size_t>(i) - 1];
            int want = tau[static_cast<std::size_t>(i) - 1];
            match = lower_only ? have >= want : have == want;
        }
        if (match) ++count;
    }
    return count;
}

inline long count_bruteforce(const CountingState& st, int n) {
    return count_bruteforce(st.S, st.tau, st.U, n);
}

/* The stable polynomial for bidegree (a, b), recovered from the exact
 * tables alone: dimensions are polynomial in n of degree a+b from
 * n = a+b on, so the a+b+1 samples at n = a+b .. 2(a+b) pin it down.
 */
inline DimensionPolynomial interpolate_dimension_poly(int a, int b, int max_n = 10, int threads = 1) {
    if (a < 0 || b < 0) throw std::invalid_argument("bidegrees must be nonnegative");
    int hi = 2 * (a + b);
    if (hi > max_n)
        throw std::invalid_argument("interpolation needs the exact table at n = " + std::to_string(hi) +
                                    ", beyond the enumeration bound " + std::to_string(max_n) +
                                    "; use the recursion method instead");
    std::vector<std::pair<BigRat, BigRat>> points;
    for (int n = a + b; n <= hi; ++n)
        points.emplace_back(BigRat(n), BigRat(dim_exact(n, a, b, threads)));
    return interpolate(points);
}

struct CheckRecord {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerificationReport {
    std::string subject;
    std::vector<CheckRecord> checks;

    void add(const std::string& name, const std::string& expected, const std::string& actual) {
        checks.push_back({name, expected, actual, expected == actual});
    }
    void add(const std::string& name, bool pass, const std::string& expected, const std::string& actual) {
        checks.push_back({name, expected, actual, pass});
    }
    int passed() const {
        int k = 0;
        for (const auto& c : checks) k += c.pass ? 1 : 0;
        return k;
    }
    int failed() const { return static_cast<int>(checks.size()) - passed(); }
    bool ok() const { return failed() == 0; }
};

}  // namespace diagharm

#endif
