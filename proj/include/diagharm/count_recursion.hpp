#ifndef DIAGHARM_COUNT_RECURSION_HPP
#define DIAGHARM_COUNT_RECURSION_HPP

/* Closed-form counting of descent classes, by recursion on where the
 * largest value sits.
 *
 * Write F(x) for the number of length-x permutations in the class
 * (S, tau, U). Deleting the maximum maps the class onto its successor
 * classes, one per maximal spot, and the spot at the far end leaves the
 * state unchanged; so with Q(l) = sum of the other stable spots'
 * successor counts at length l-1,
 *
 *     F(l) = F(l-1) + Q(l)      for l above the boundary length,
 *
 * and at the boundary length itself (first_nonzero) the far-end spot is
 * replaced by a one-time spot at the last descent whose successor counts
 * enter as the constant E. Summing the telescope gives
 *
 *     F(x) = E + sum_{l = first_nonzero}^{x} Q(l),
 *
 * closed into a polynomial with poly_sum_range. Successor states carry
 * strictly less total descent mass, so the recursion grounds out at the
 * descent-free class (count 1); results are memoized on the canonical
 * raised form of the state.
 *
 * construct_permutation replays the same decomposition to build an
 * explicit witness: repeatedly place the largest remaining value at the
 * rightmost spot with a realizable successor.
 */

#include "diagharm/counting_state.hpp"
#include "diagharm/dimension_polynomial.hpp"
#include "diagharm/permutation.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diagharm {

struct RecursionNode {
    CountingState state;
    std::vector<std::pair<int, CountingState>> children;  // (spot, successor)
    DimensionPolynomial resolved;
    long first_nonzero = -1;
};

inline RecursionNode count_tree(const CountingState& input) {
    validate_state(input);

    // Canonical form: raised prefix, same class.
    CountingState st(input);
    st.tau = normalized_values(st);

    static std::map<CountingState, RecursionNode> memo;
    static std::mutex lock;
    {
        std::lock_guard<std::mutex> guard(lock);
        auto it = memo.find(st);
        if (it != memo.end()) return it->second;
    }

    RecursionNode node;
    node.state = st;

    if (st.S.empty()) {
        node.resolved = DimensionPolynomial::constant(BigRat(1));
        node.first_nonzero = 0;
    } else if (!is_class_nonempty(st)) {
        node.resolved = DimensionPolynomial::zero();
        node.first_nonzero = -1;
    } else {
        int sd = st.last_descent();
        std::vector<int> ell = st.tau;  // already raised
        long fnz = sd + ell.back();
        node.first_nonzero = fnz;

        DimensionPolynomial Q;
        for (int m : maximal_spots(st).interior) {
            for (const CountingState& child : psi_step(st, m)) {
                node.children.emplace_back(m, child);
                Q += count_tree(child).resolved.shifted_argument(-1);
            }
        }

        // One-time spot at the last descent, open only at the boundary
        // length: its successor counts enter as a constant.
        BigRat E = 0;
        if (!st.in_U(sd) && detail::interior_spot_ok(st, ell, sd, fnz)) {
            for (const CountingState& child : psi_step(st, sd)) {
                node.children.emplace_back(sd, child);
                E += count_tree(child).resolved.eval(fnz - 1);
            }
        }

        node.resolved = DimensionPolynomial::constant(E) + poly_sum_range(Q, fnz);
    }

    std::lock_guard<std::mutex> guard(lock);
    return memo.emplace(st, std::move(node)).first->second;
}

// The class size as a polynomial in the length, valid from first_nonzero
// on. Unrealizable prefixes count zero everywhere.
inline DimensionPolynomial count_poly(const CountingState& st) { return count_tree(st).resolved; }

inline DimensionPolynomial count_poly(const std::vector<int>& S, const std::vector<int>& tau,
                                      const std::vector<int>& U) {
    return count_poly(CountingState{S, tau, U});
}

/* Build a length-n permutation with descent set S and weight sequence
 * tau. tau may be just the prefix (length s_d) or the full sequence, in
 * which case the forced countdown tail is checked. Throws when the
 * prefix is not realizable at length n; on permissible input with
 * n >= first_nonzero this never fails.
 */
inline Permutation construct_permutation(const std::vector<int>& S, const std::vector<int>& tau, int n) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    int sd = S.empty() ? 0 : S.back();
    CountingState start{S, {}, {}};
    if (static_cast<int>(tau.size()) == sd) {
        start.tau = tau;
    } else if (static_cast<int>(tau.size()) == n) {
        for (int j = sd + 1; j <= n; ++j)
            if (tau[static_cast<std::size_t>(j) - 1] != n - j + 1)
                throw std::invalid_argument("weights past the last descent must count down to 1");
        start.tau.assign(tau.begin(), tau.begin() + sd);
    } else {
        throw std::invalid_argument("weight sequence must cover exactly the prefix or the full length");
    }
    validate_state(start);

    long fnz = first_nonzero(start);
    if (fnz < 0)
        throw std::runtime_error("no maximal spot can accept the largest value: the prefix is not realizable");
    if (n < fnz)
        throw std::invalid_argument("length " + std::to_string(n) + " is below the shortest realizable length " +
                                    std::to_string(fnz));

    Permutation sigma(static_cast<std::size_t>(n), 0);
    std::vector<int> slots(static_cast<std::size_t>(n));  // unfilled positions, ascending
    for (int i = 0; i < n; ++i) slots[static_cast<std::size_t>(i)] = i + 1;

    CountingState cur = start;
    int length = n;
    int value = n;
    while (!cur.S.empty()) {
        SpotSet spots = spots_at_length(cur, length);
        bool placed = false;
        if (spots.at_n) {  // rightmost spot; the state survives unchanged
            sigma[static_cast<std::size_t>(slots.back()) - 1] = value;
            slots.pop_back();
            placed = true;
        } else {
            for (auto it = spots.interior.rbegin(); it != spots.interior.rend() && !placed; ++it) {
                for (const CountingState& child : psi_step(cur, *it)) {
                    if (!is_class_nonempty_at_length(child, length - 1)) continue;
                    sigma[static_cast<std::size_t>(slots[static_cast<std::size_t>(*it) - 1]) - 1] = value;
                    slots.erase(slots.begin() + (*it - 1));
                    cur = child;
                    placed = true;
                    break;
                }
            }
        }
        if (!placed)
            throw std::runtime_error("no maximal spot can accept the largest value: the prefix is not realizable");
        --length;
        --value;
    }
    for (std::size_t i = 0; i < slots.size(); ++i)
        sigma[static_cast<std::size_t>(slots[i]) - 1] = static_cast<int>(i) + 1;
    return sigma;
}

}  // namespace diagharm

#endif
