#ifndef DIAGHARM_PERMUTATION_HPP
#define DIAGHARM_PERMUTATION_HPP

/* Permutation statistics: descents, major index, increasing runs and the
 * derived weight sequence w(sigma).
 *
 * Permutations are vectors holding the values sigma_1..sigma_n; positions
 * are 1-based throughout the interfaces, matching the combinatorial
 * conventions, so entry i lives at index i-1.
 *
 * The weight of position i is (distance to the end of its increasing run)
 * plus the number of entries in the following run smaller than sigma_i. A
 * virtual 0 appended as a final one-element run makes the last run behave
 * uniformly: every position in it picks up +1.
 */

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace diagharm {

using Permutation = std::vector<int>;

inline std::vector<int> descents(const Permutation& sigma) {
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
        if (sigma[i] > sigma[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return d;
}

inline int maj(const Permutation& sigma) {
    int m = 0;
    for (int i : descents(sigma)) m += i;
    return m;
}

// Maximal increasing runs, as inclusive 1-based [start, end] intervals.
inline std::vector<std::pair<int, int>> runs(const Permutation& sigma) {
    std::vector<std::pair<int, int>> out;
    int n = static_cast<int>(sigma.size());
    int start = 1;
    for (int i = 1; i <= n; ++i) {
        if (i == n || sigma[static_cast<std::size_t>(i) - 1] > sigma[static_cast<std::size_t>(i)]) {
            out.emplace_back(start, i);
            start = i + 1;
        }
    }
    return out;
}

inline std::vector<int> wseq(const Permutation& sigma) {
    int n = static_cast<int>(sigma.size());
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> rs = runs(sigma);
    for (std::size_t r = 0; r < rs.size(); ++r) {
        auto [start, end] = rs[r];
        for (int i = start; i <= end; ++i) {
            int smaller;
            if (r + 1 < rs.size()) {
                smaller = 0;
                for (int j = rs[r + 1].first; j <= rs[r + 1].second; ++j)
                    if (sigma[static_cast<std::size_t>(j) - 1] < sigma[static_cast<std::size_t>(i) - 1])
                        ++smaller;
            } else {
                smaller = 1;  // the virtual trailing 0
            }
            w[static_cast<std::size_t>(i) - 1] = (end - i) + smaller;
        }
    }
    return w;
}

// Visit all n! permutations of {1..n} in lexicographic order.
template <typename F>
void iter_permutations(int n, F&& visit) {
    Permutation sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        visit(static_cast<const Permutation&>(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace diagharm

#endif
