#ifndef DIAGHARM_PARKING_HPP
#define DIAGHARM_PARKING_HPP

/* Parking functions on n cars and their (dinv, area) statistics.
 *
 * A word p in [1..n]^n is a parking function when, for every i, at least
 * i of its entries are <= i. Car c prefers spot p_c; under the classical
 * parking process car c ends up in row
 *
 *     row(c) = #{j : p_j < p_c} + #{j < c : p_j = p_c} + 1,
 *
 * each row holding exactly one car. Reading the cars off by row gives a
 * labelled lattice-path picture: label_word[i] is the car in row i+1 and
 * area_word[i] = row - preference is its horizontal displacement. area is
 * the total displacement; dinv counts row pairs i < j with either equal
 * displacement and increasing labels, or displacement dropping by exactly
 * one with decreasing labels.
 */

#include <cstdint>
#include <vector>

namespace diagharm {

using ParkingWord = std::vector<int>;

struct ParkingStats {
    int area = 0;
    int dinv = 0;
    std::vector<int> area_word;   // displacement per row, rows bottom-up
    std::vector<int> label_word;  // car per row
};

inline bool is_parking_function(const ParkingWord& p) {
    int n = static_cast<int>(p.size());
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    for (int v : p) {
        if (v < 1 || v > n) return false;
        ++count[static_cast<std::size_t>(v)];
    }
    int seen = 0;
    for (int i = 1; i <= n; ++i) {
        seen += count[static_cast<std::size_t>(i)];
        if (seen < i) return false;
    }
    return true;
}

inline ParkingStats pf_stats(const ParkingWord& p) {
    int n = static_cast<int>(p.size());
    ParkingStats st;
    st.area_word.assign(static_cast<std::size_t>(n), 0);
    st.label_word.assign(static_cast<std::size_t>(n), 0);
    for (int c = 1; c <= n; ++c) {
        int pref = p[static_cast<std::size_t>(c) - 1];
        int row = 1;
        for (int j = 1; j <= n; ++j) {
            int q = p[static_cast<std::size_t>(j) - 1];
            if (q < pref || (q == pref && j < c)) ++row;
        }
        st.label_word[static_cast<std::size_t>(row) - 1] = c;
        st.area_word[static_cast<std::size_t>(row) - 1] = row - pref;
        st.area += row - pref;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int ai = st.area_word[static_cast<std::size_t>(i)];
            int aj = st.area_word[static_cast<std::size_t>(j)];
            if ((ai == aj && st.label_word[static_cast<std::size_t>(i)] < st.label_word[static_cast<std::size_t>(j)]) ||
                (ai == aj + 1 && st.label_word[static_cast<std::size_t>(i)] > st.label_word[static_cast<std::size_t>(j)]))
                ++st.dinv;
        }
    return st;
}

// Visit every parking function of size n, in lexicographic order of the
// preference word. Runs an odometer over [1..n]^n and filters; the filter
// cost is dwarfed by the visit cost for every n this project touches.
template <typename F>
void iter_parking_functions(int n, F&& visit) {
    if (n <= 0) return;
    ParkingWord p(static_cast<std::size_t>(n), 1);
    for (;;) {
        if (is_parking_function(p)) visit(static_cast<const ParkingWord&>(p));
        int i = n - 1;
        while (i >= 0 && p[static_cast<std::size_t>(i)] == n) {
            p[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++p[static_cast<std::size_t>(i)];
    }
}

}  // namespace diagharm

#endif
