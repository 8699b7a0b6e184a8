#ifndef DIAGHARM_BIVARIATE_SERIES_HPP
#define DIAGHARM_BIVARIATE_SERIES_HPP

/* Bigraded Hilbert series as exact coefficient tables in q and t, plus
 * the permutation-side evaluator that fills them.
 *
 * hilbert_schedules(n) accumulates, over all of S_n, the term
 * t^maj(sigma) * prod_i [w_i(sigma)]_q. Contributions are bucketed by
 * maj, so the inner loop is a univariate product of q-integers. That
 * product is built incrementally with a sliding window sum: multiplying
 * by [w]_q maps coefficient c_j to c_{j-w+1} + ... + c_j, an O(length)
 * update. All intermediate totals fit comfortably in int64 because every
 * coefficient is nonnegative and bounded by the grand total (n+1)^(n-1),
 * which is < 2^63 for every n this code will ever enumerate; the final
 * table is widened to arbitrary precision anyway.
 *
 * The permutation stream is partitioned by first entry, so worker threads
 * own disjoint blocks and their partial buckets merge by plain addition,
 * giving the same exact table as a sequential pass regardless of thread
 * count.
 */

#include "diagharm/bigint.hpp"
#include "diagharm/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <utility>
#include <vector>

namespace diagharm {

class BivariateSeries {
public:
    using Key = std::pair<int, int>;  // (q exponent, t exponent)

    void add(int q_exp, int t_exp, const BigInt& c) {
        if (c == 0) return;
        BigInt& slot = entries_[{q_exp, t_exp}];
        slot += c;
        if (slot == 0) entries_.erase({q_exp, t_exp});
    }

    BigInt coeff(int q_exp, int t_exp) const {
        auto it = entries_.find({q_exp, t_exp});
        return it == entries_.end() ? BigInt(0) : it->second;
    }

    // Value at q = t = 1.
    BigInt total() const {
        BigInt s = 0;
        for (const auto& [k, c] : entries_) s += c;
        return s;
    }

    const std::map<Key, BigInt>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    BivariateSeries transposed() const {
        BivariateSeries out;
        for (const auto& [k, c] : entries_) out.add(k.second, k.first, c);
        return out;
    }

    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const BivariateSeries& a, const BivariateSeries& b) { return !(a == b); }

private:
    std::map<Key, BigInt> entries_;
};

// Each weight replaced by min(weight, k+1); products of the truncated
// q-integers keep the same coefficient of q^k.
inline std::vector<int> truncate_w(const std::vector<int>& w, int k) {
    std::vector<int> out(w);
    for (int& y : out)
        y = std::min(y, k + 1);
    return out;
}

namespace detail {

// Buckets: per-maj dense q-coefficient rows in int64.
using MajBuckets = std::vector<std::vector<std::int64_t>>;

// Accumulate t^maj * prod [w_i]_q for all permutations of n with first
// entry in `firsts`. Scratch buffers live across iterations.
inline void schedules_block(int n, const std::vector<int>& firsts, MajBuckets& buckets) {
    std::vector<std::int64_t> cur, next;
    Permutation sigma(static_cast<std::size_t>(n));
    for (int f : firsts) {
        sigma[0] = f;
        int fill = 1;
        for (int v = 1; v <= n; ++v)
            if (v != f) sigma[static_cast<std::size_t>(fill++)] = v;
        do {
            int m = maj(sigma);
            std::vector<int> w = wseq(sigma);
            cur.assign(1, 1);
            for (int wi : w) {
                std::size_t len = cur.size() + static_cast<std::size_t>(wi) - 1;
                next.assign(len, 0);
                std::int64_t window = 0;
                for (std::size_t j = 0; j < len; ++j) {
                    if (j < cur.size()) window += cur[j];
                    if (j >= static_cast<std::size_t>(wi)) window -= cur[j - static_cast<std::size_t>(wi)];
                    next[j] = window;
                }
                cur.swap(next);
            }
            auto& row = buckets[static_cast<std::size_t>(m)];
            if (row.size() < cur.size()) row.resize(cur.size(), 0);
            for (std::size_t j = 0; j < cur.size(); ++j) row[j] += cur[j];
        } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
    }
}

}  // namespace detail

inline BivariateSeries hilbert_schedules(int n, int threads = 1) {
    BivariateSeries out;
    if (n <= 0) {
        out.add(0, 0, 1);
        return out;
    }
    int maj_max = n * (n - 1) / 2;
    int workers = std::clamp(threads, 1, n);

    std::vector<detail::MajBuckets> partial(
        static_cast<std::size_t>(workers),
        detail::MajBuckets(static_cast<std::size_t>(maj_max) + 1));
    std::vector<std::vector<int>> firsts(static_cast<std::size_t>(workers));
    for (int f = 1; f <= n; ++f)
        firsts[static_cast<std::size_t>((f - 1) % workers)].push_back(f);

    if (workers == 1) {
        detail::schedules_block(n, firsts[0], partial[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(detail::schedules_block, n, std::cref(firsts[static_cast<std::size_t>(w)]),
                              std::ref(partial[static_cast<std::size_t>(w)]));
        for (auto& th : pool) th.join();
    }

    for (int m = 0; m <= maj_max; ++m) {
        std::size_t width = 0;
        for (const auto& b : partial) width = std::max(width, b[static_cast<std::size_t>(m)].size());
        for (std::size_t j = 0; j < width; ++j) {
            std::int64_t c = 0;
            for (const auto& b : partial)
                if (j < b[static_cast<std::size_t>(m)].size()) c += b[static_cast<std::size_t>(m)][j];
            if (c != 0) out.add(static_cast<int>(j), m, BigInt(c));
        }
    }
    return out;
}

// Coefficient of q^a t^b in the series for n, with the full table cached
// per n so repeated queries (interpolation grids, verification sweeps)
// enumerate S_n only once.
inline BigInt dim_exact(int n, int a, int b, int threads = 1) {
    static std::map<int, BivariateSeries> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, hilbert_schedules(n, threads)).first;
    return it->second.coeff(a, b);
}

}  // namespace diagharm

#endif
