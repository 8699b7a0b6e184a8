#ifndef DIAGHARM_COUNTING_STATE_HPP
#define DIAGHARM_COUNTING_STATE_HPP

/* Descent classes with pinned weight prefixes, and the moves that delete
 * the maximum entry.
 *
 * A CountingState (S, tau, U) names the set of permutations whose descent
 * set is exactly S and whose weight sequence agrees with tau on the
 * prefix 1..s_d, where s_d is the last descent. Positions in U demand
 * only w_i >= tau_i; all others demand equality. Positions past s_d are
 * forced to the countdown n-s_d, ..., 1 and carry no data.
 *
 * Everything here is exact bookkeeping on that data:
 *
 *  - w_bounds: the attainable range of w_i inside a descent class. The
 *    ceiling is length-free except in the final prefix run, where it
 *    grows with n.
 *  - is_permissible / normalized_values / first_nonzero: which prefixes
 *    are realizable, the canonical raised form of a lower-bounded prefix,
 *    and the shortest length admitting a member.
 *  - maximal_spots / spots_at_length: where the largest value can sit.
 *  - phi_step / psi_step: the descent set, prefix, and bound set of the
 *    class after deleting the maximum at a given spot. psi_step returns
 *    two states in the one genuinely ambiguous situation (a lower-bounded
 *    weight 1 just left of the spot), splitting by whether that weight
 *    equals 1 or exceeds it.
 *
 * Positions and descent labels are 1-based in every interface; vectors
 * are indexed accordingly (value for position i sits at index i-1).
 */

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace diagharm {

struct CountingState {
    std::vector<int> S;    // descent positions, strictly increasing
    std::vector<int> tau;  // prefix weights for positions 1..S.back()
    std::vector<int> U;    // sorted positions where tau is only a lower bound

    int last_descent() const { return S.empty() ? 0 : S.back(); }
    bool in_U(int i) const { return std::binary_search(U.begin(), U.end(), i); }
    bool is_descent(int i) const { return std::binary_search(S.begin(), S.end(), i); }

    friend bool operator==(const CountingState&, const CountingState&) = default;
    friend auto operator<=>(const CountingState&, const CountingState&) = default;
};

inline void validate_state(const CountingState& st) {
    for (std::size_t i = 0; i < st.S.size(); ++i) {
        if (st.S[i] < 1 || (i > 0 && st.S[i] <= st.S[i - 1]))
            throw std::invalid_argument("descent set must be strictly increasing and positive");
    }
    if (static_cast<int>(st.tau.size()) != st.last_descent())
        throw std::invalid_argument("prefix length must equal the last descent position");
    for (int v : st.tau)
        if (v < 1) throw std::invalid_argument("prefix weights must be positive");
    for (std::size_t i = 0; i < st.U.size(); ++i) {
        if (st.U[i] < 1 || st.U[i] > st.last_descent() || (i > 0 && st.U[i] <= st.U[i - 1]))
            throw std::invalid_argument("lower-bound set must be a sorted subset of 1..last descent");
    }
}

struct WBound {
    int min = 1;
    int max = 0;             // meaningful only when !n_dependent
    bool n_dependent = false;  // ceiling is n - i, growing with the length
};

/* Attainable range of w_i within descent class S. With s_t < i <= s_{t+1}
 * (s_0 = 0): the floor is s_{t+1} - i, except exactly 1 at the descent
 * itself; the ceiling adds the size of the following run, s_{t+2} - i,
 * unless run t+1 is the last prefix run, where the following "run" is the
 * forced tail and the ceiling n - i escapes to the length.
 */
inline WBound w_bounds(const std::vector<int>& S, int i) {
    if (S.empty() || i < 1 || i > S.back())
        throw std::out_of_range("position must lie in 1..last descent");
    auto it = std::lower_bound(S.begin(), S.end(), i);  // s_{t+1}
    WBound b;
    b.min = (*it == i) ? 1 : *it - i;
    if (it + 1 == S.end()) {
        b.n_dependent = true;
    } else {
        b.max = *(it + 1) - i;
    }
    return b;
}

inline int w_max_at_length(const std::vector<int>& S, int i, int length) {
    WBound b = w_bounds(S, i);
    return b.n_dependent ? length - i : b.max;
}

/* A prefix is realizable for some length iff every entry sits inside its
 * bounds (length-dependent ceilings bind only at short lengths and are
 * ignored here) and neighbours inside one run never drop by more than
 * one: tau_j <= tau_{j+1} + 1.
 */
inline bool is_permissible(const std::vector<int>& S, const std::vector<int>& tau) {
    if (S.empty()) return tau.empty();
    if (static_cast<int>(tau.size()) != S.back())
        throw std::invalid_argument("prefix length must equal the last descent position");
    for (int i = 1; i <= S.back(); ++i) {
        WBound b = w_bounds(S, i);
        int v = tau[static_cast<std::size_t>(i) - 1];
        if (v < b.min) return false;
        if (!b.n_dependent && v > b.max) return false;
    }
    for (int j = 1; j < S.back(); ++j) {
        bool same_run = !std::binary_search(S.begin(), S.end(), j);
        if (same_run && tau[static_cast<std::size_t>(j) - 1] > tau[static_cast<std::size_t>(j)] + 1)
            return false;
    }
    return true;
}

// All descent sets whose positions sum to b, i.e. partitions of b into
// distinct parts; listed with the largest part first, as sorted sets.
inline std::vector<std::vector<int>> descent_sets_with_maj(int b) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            std::vector<int> set(acc.rbegin(), acc.rend());
            out.push_back(std::move(set));
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            acc.push_back(part);
            self(self, remaining - part, part - 1);
            acc.pop_back();
        }
    };
    rec(rec, b, b);
    return out;
}

/* Canonical raised prefix: lower-bounded entries are lifted to the least
 * value consistent with their floor and with the preceding same-run entry
 * (w can drop by at most one inside a run). Two states with the same
 * raised prefix describe the same class.
 */
inline std::vector<int> normalized_values(const CountingState& st) {
    std::vector<int> ell(st.tau);
    int sd = st.last_descent();
    for (int i = 1; i <= sd; ++i) {
        if (!st.in_U(i)) continue;
        int v = std::max(ell[static_cast<std::size_t>(i) - 1], w_bounds(st.S, i).min);
        if (i >= 2 && !st.is_descent(i - 1))
            v = std::max(v, ell[static_cast<std::size_t>(i) - 2] - 1);
        ell[static_cast<std::size_t>(i) - 1] = v;
    }
    return ell;
}

// Whether the class has members once the length is large enough.
inline bool is_class_nonempty(const CountingState& st) {
    if (st.S.empty()) return true;
    std::vector<int> ell = normalized_values(st);
    int sd = st.last_descent();
    for (int i = 1; i <= sd; ++i) {
        WBound b = w_bounds(st.S, i);
        int v = ell[static_cast<std::size_t>(i) - 1];
        if (!b.n_dependent && v > b.max) return false;
        if (!st.in_U(i)) {
            if (v < b.min) return false;
            if (i >= 2 && !st.is_descent(i - 1) && v < ell[static_cast<std::size_t>(i) - 2] - 1)
                return false;
        }
    }
    return true;
}

/* Shortest length with a member: the last prefix weight forces
 * w_{s_d} <= length - s_d, and the raised value is attained exactly at
 * length s_d + ell_{s_d}. Returns 0 for the descent-free class and -1
 * for an empty class.
 */
inline long first_nonzero(const CountingState& st) {
    if (st.S.empty()) return 0;
    if (!is_class_nonempty(st)) return -1;
    std::vector<int> ell = normalized_values(st);
    return st.last_descent() + ell.back();
}

inline bool is_class_nonempty_at_length(const CountingState& st, int length) {
    long fnz = first_nonzero(st);
    return fnz >= 0 && length >= fnz;
}

namespace detail {

/* Prefixes with a fixed value on U and a capped range elsewhere, kept
 * when the resulting class has members; shared by the two equivalent
 * assembly indexings. The filter is deliberately the class test, not the
 * bare prefix test: a lower-bounded entry pinned beneath its floor still
 * names a nonempty class (the floor takes over), and dropping it would
 * lose every member whose weight at that spot is forced high.
 */
inline std::vector<std::vector<int>> prefixes_with(const std::vector<int>& S, const std::vector<int>& U,
                                                   int value_on_u, int cap_off_u) {
    std::vector<std::vector<int>> out;
    if (S.empty()) {
        if (U.empty()) out.push_back({});
        return out;
    }
    int len = S.back();
    std::vector<int> tau(static_cast<std::size_t>(len), 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos > len) {
            if (is_class_nonempty(CountingState{S, tau, U})) out.push_back(tau);
            return;
        }
        if (std::binary_search(U.begin(), U.end(), pos)) {
            tau[static_cast<std::size_t>(pos) - 1] = value_on_u;
            self(self, pos + 1);
        } else {
            for (int v = 1; v <= cap_off_u; ++v) {
                tau[static_cast<std::size_t>(pos) - 1] = v;
                self(self, pos + 1);
            }
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace detail

// Prefixes with tau_l = k+1 on U and 1..k elsewhere, filtered down to
// those naming nonempty classes.
inline std::vector<std::vector<int>> enumerate_permissible(const std::vector<int>& S, int k,
                                                           const std::vector<int>& U) {
    return detail::prefixes_with(S, U, k + 1, k);
}

struct SpotSet {
    std::vector<int> interior;  // prefix positions that can hold the maximum
    bool at_n = false;          // the final position can hold it too
};

namespace detail {

/* Interior spot conditions at position m = s_y (or m = 1), in terms of
 * the raised prefix ell. Placing the maximum at m forces w_m to its
 * ceiling and caps the previous descent strictly below its own ceiling,
 * which yields:
 *   (a) the run ending at m has another position (s_{y-1} != m-1),
 *   (b) for y >= 2, ell at s_{y-1} is strictly below s_y - s_{y-1},
 *   (c) the pinned value at m equals the forced ceiling, or m is only
 *       lower-bounded. In the last prefix run the ceiling is
 *       length - m, so an exact pin works only at the single boundary
 *       length (first_nonzero); a lower bound works from there on.
 * Position 1 (when it is a descent) has no left neighbour, leaving only
 * condition (c) with ceiling s_2 - 1, or length - 1 when it is the sole
 * descent.
 *
 * `length` < 0 asks for the stable reading: every length above
 * first_nonzero.
 */
inline bool interior_spot_ok(const CountingState& st, const std::vector<int>& ell, int m, long length) {
    const std::vector<int>& S = st.S;
    int d = static_cast<int>(S.size());
    auto pos = std::lower_bound(S.begin(), S.end(), m);
    if (pos == S.end() || *pos != m) return false;  // interior spots are descents
    int y = static_cast<int>(pos - S.begin()) + 1;

    if (m == 1) {
        if (st.in_U(1)) return true;
        if (d >= 2) return st.tau[0] == S[1] - 1;
        return length >= 0 && st.tau[0] == length - 1;
    }

    int prev = (y >= 2) ? S[static_cast<std::size_t>(y) - 2] : 0;
    if (prev == m - 1) return false;  // (a)
    if (y >= 2 && ell[static_cast<std::size_t>(prev) - 1] >= m - prev) return false;  // (b)

    if (y < d)  // (c), length-free ceiling
        return st.in_U(m) || st.tau[static_cast<std::size_t>(m) - 1] == S[static_cast<std::size_t>(y)] - m;
    if (st.in_U(m)) return true;
    return length >= 0 && st.tau[static_cast<std::size_t>(m) - 1] == length - m;
}

}  // namespace detail

// Spots valid at every length strictly above first_nonzero.
inline SpotSet maximal_spots(const CountingState& st) {
    validate_state(st);
    SpotSet spots;
    spots.at_n = true;
    if (st.S.empty()) return spots;
    std::vector<int> ell = normalized_values(st);
    for (int m : st.S)
        if (detail::interior_spot_ok(st, ell, m, -1)) spots.interior.push_back(m);
    return spots;
}

// Spots at one concrete length >= first_nonzero. The final position
// qualifies only above the boundary length; an exactly pinned last
// prefix weight opens its descent as a spot exactly at the boundary.
inline SpotSet spots_at_length(const CountingState& st, int length) {
    validate_state(st);
    SpotSet spots;
    if (st.S.empty()) {
        spots.at_n = length >= 1;
        return spots;
    }
    std::vector<int> ell = normalized_values(st);
    spots.at_n = ell.back() < length - st.last_descent();
    for (int m : st.S)
        if (detail::interior_spot_ok(st, ell, m, length)) spots.interior.push_back(m);
    return spots;
}

namespace detail {

// A spot is structurally legal if it qualifies at some admissible
// length: either stably or as the boundary-length spot at the last
// descent.
inline void require_spot(const CountingState& st, int m) {
    if (m > st.last_descent()) return;  // the final position, always reachable above the boundary
    std::vector<int> ell = normalized_values(st);
    if (interior_spot_ok(st, ell, m, -1)) return;
    long fnz = first_nonzero(st);
    if (fnz >= 0 && interior_spot_ok(st, ell, m, fnz)) return;
    throw std::invalid_argument("position " + std::to_string(m) + " is not a maximal spot of this class");
}

}  // namespace detail

/* Descent set after deleting the maximum at spot m. Beyond the last
 * descent nothing changes. At an interior descent s_y the branch depends
 * on the effective weight just left of m: weight 1 means the runs around
 * m merge (s_y disappears, later descents slide left), otherwise m-1
 * becomes a descent itself (descents from s_y on slide left). Deleting
 * position 1 shifts everything left.
 */
inline std::vector<int> phi_step(const CountingState& st, int m) {
    validate_state(st);
    detail::require_spot(st, m);
    std::vector<int> out;
    if (m > st.last_descent()) return st.S;
    if (m == 1) {
        for (std::size_t i = 1; i < st.S.size(); ++i) out.push_back(st.S[i] - 1);
        return out;
    }
    std::vector<int> ell = normalized_values(st);
    bool merge = ell[static_cast<std::size_t>(m) - 2] == 1;
    for (int s : st.S) {
        if (s < m)
            out.push_back(s);
        else if (s > m)
            out.push_back(s - 1);
        else if (!merge)
            out.push_back(s - 1);
        // merge: the descent at m disappears entirely
    }
    return out;
}

namespace detail {

// Helpers shared by the psi cases: drop position m from a prefix,
// sliding later values left.
inline std::vector<int> erase_position(const std::vector<int>& tau, int m) {
    std::vector<int> out;
    out.reserve(tau.size() - 1);
    for (std::size_t i = 0; i < tau.size(); ++i)
        if (static_cast<int>(i) + 1 != m) out.push_back(tau[i]);
    return out;
}

inline std::vector<int> shift_set_past(const std::vector<int>& U, int m) {
    std::vector<int> out;
    for (int u : U) {
        if (u < m)
            out.push_back(u);
        else if (u > m)
            out.push_back(u - 1);
    }
    return out;
}

}  // namespace detail

/* Successor classes after deleting the maximum at spot m; usually one,
 * two when the split applies. See the case comments inline.
 */
inline std::vector<CountingState> psi_step(const CountingState& st, int m) {
    validate_state(st);
    detail::require_spot(st, m);

    // Past the last descent: the forced tail shortens, the data is untouched.
    if (m > st.last_descent()) return {st};

    // Deleting position 1: every position, descent, and bound slides left.
    if (m == 1) {
        CountingState child;
        for (std::size_t i = 1; i < st.S.size(); ++i) child.S.push_back(st.S[i] - 1);
        child.tau.assign(st.tau.begin() + 1, st.tau.end());
        child.U = detail::shift_set_past(st.U, 1);
        if (child.S.empty()) {
            child.tau.clear();
            child.U.clear();
        }
        return {child};
    }

    auto pos = std::lower_bound(st.S.begin(), st.S.end(), m);
    int y = static_cast<int>(pos - st.S.begin()) + 1;
    int d = static_cast<int>(st.S.size());
    int run_start = (y >= 2 ? st.S[static_cast<std::size_t>(y) - 2] : 0) + 1;

    // m-1 keeps its descent: weights inside [run_start, m-1] drop by one.
    // Shifting the descents from m on left by one turns m itself into the
    // new descent at m-1 (distinct from s_{y-1} by spot condition (a)).
    auto descent_kept = [&](const CountingState& parent) {
        CountingState child;
        for (int s : parent.S) child.S.push_back(s >= m ? s - 1 : s);
        std::vector<int> tau(parent.tau);
        for (int i = run_start; i <= m - 1; ++i)
            tau[static_cast<std::size_t>(i) - 1] = std::max(tau[static_cast<std::size_t>(i) - 1] - 1, 1);
        child.tau = detail::erase_position(tau, m);
        child.U = detail::shift_set_past(parent.U, m);
        return child;
    };

    // The runs around m merge. Weights inside [run_start, m-1] pick up the
    // size of the absorbed run and become lower bounds; in the previous
    // run, an exactly pinned weight reaching to m-1 (tied to the deleted
    // maximum) also degrades to a lower bound.
    auto runs_merged = [&](const CountingState& parent) {
        CountingState child;
        std::vector<int> tau(parent.tau);
        std::vector<int> u(parent.U);
        auto mark = [&u](int p) {
            if (!std::binary_search(u.begin(), u.end(), p)) {
                u.insert(std::upper_bound(u.begin(), u.end(), p), p);
            }
        };
        if (y >= 2) {
            int prev_start = (y >= 3 ? parent.S[static_cast<std::size_t>(y) - 3] : 0) + 1;
            int prev_end = parent.S[static_cast<std::size_t>(y) - 2];
            for (int i = prev_start; i <= prev_end; ++i)
                if (!parent.in_U(i) && i + tau[static_cast<std::size_t>(i) - 1] >= m - 1) mark(i);
        }
        if (y < d) {
            int g = parent.S[static_cast<std::size_t>(y)] - m;  // size of the absorbed run
            for (int i = run_start; i <= m - 1; ++i) {
                tau[static_cast<std::size_t>(i) - 1] += g - 1;
                mark(i);
            }
            for (int s : parent.S) {
                if (s < m)
                    child.S.push_back(s);
                else if (s > m)
                    child.S.push_back(s - 1);
            }
            child.tau = detail::erase_position(tau, m);
            child.U = detail::shift_set_past(u, m);
        } else {
            // The run ending at m merges into the forced tail: its
            // positions leave the prefix altogether.
            int new_last = (y >= 2) ? parent.S[static_cast<std::size_t>(y) - 2] : 0;
            child.S.assign(parent.S.begin(), parent.S.begin() + (y - 1));
            child.tau.assign(tau.begin(), tau.begin() + new_last);
            for (int v : u)
                if (v <= new_last) child.U.push_back(v);
        }
        return child;
    };

    std::vector<int> ell = normalized_values(st);
    int left = ell[static_cast<std::size_t>(m) - 2];
    if (left >= 2) return {descent_kept(st)};
    if (!st.in_U(m - 1)) return {runs_merged(st)};

    // Split: the lower-bounded weight 1 left of m either exceeds 1, which
    // keeps the descent (pin it to 2 and continue as a lower bound), or
    // equals 1 exactly, which merges the runs.
    CountingState kept(st);
    kept.tau[static_cast<std::size_t>(m) - 2] = 2;
    CountingState merged(st);
    merged.U.erase(std::find(merged.U.begin(), merged.U.end(), m - 1));
    return {descent_kept(kept), runs_merged(merged)};
}

}  // namespace diagharm

#endif
