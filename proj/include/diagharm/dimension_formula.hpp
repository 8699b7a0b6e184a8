#ifndef DIAGHARM_DIMENSION_FORMULA_HPP
#define DIAGHARM_DIMENSION_FORMULA_HPP

/*
 * Closed-form dimension polynomials in the stable range.
 *
 * For fixed bidegree (a, b) the coefficient of q^a t^b in the bigraded
 * Hilbert series becomes a polynomial in n once n >= a + b.  The
 * polynomial is assembled from three ingredients:
 *
 *   - descent sets S of total weight b, together with a subset U of
 *     prefix positions whose weights are pinned at their cap;
 *   - the counting polynomial of each realizable prefix class, which
 *     counts permutations of n with the given descent prefix;
 *   - a pentagonal-number alternating sum that counts the ways to
 *     spread the remaining q-degree over the tail weights.
 *
 * Two equivalent indexings of the same sum are provided; the second is
 * kept purely as a cross-check.  sharpness_report compares the
 * polynomial against the exact coefficient just below the stable range.
 */

#include <stdexcept>
#include <utility>
#include <vector>

#include "diagharm/bigint.hpp"
#include "diagharm/bivariate_series.hpp"
#include "diagharm/count_recursion.hpp"
#include "diagharm/counting_state.hpp"
#include "diagharm/dimension_polynomial.hpp"
#include "diagharm/qpolynomial.hpp"

namespace diagharm {

namespace detail {

// Subsets of {1..limit} in increasing mask order, each sorted ascending.
inline std::vector<std::vector<int>> subsets_upto(int limit) {
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t{1} << limit);
    for (unsigned mask = 0; mask < (1u << limit); ++mask) {
        std::vector<int> sub;
        for (int i = 1; i <= limit; ++i)
            if (mask & (1u << (i - 1))) sub.push_back(i);
        out.push_back(std::move(sub));
    }
    return out;
}

// [q^k] of the product of q-integers [tau_1]_q ... [tau_l]_q.
inline BigInt prefix_weight_coeff(const std::vector<int>& tau, int k) {
    QPolynomial prod = QPolynomial::one();
    for (int t : tau) prod *= q_integer(t);
    return q_coeff(prod, static_cast<std::size_t>(k));
}

}  // namespace detail

// P_{a,b}(n): the stable dimension polynomial for bidegree (a, b).
inline DimensionPolynomial dimension_polynomial(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("bidegree components must be nonnegative");
    if (b == 0) return knuth_poly(a, 0);
    DimensionPolynomial acc = DimensionPolynomial::zero();
    for (const auto& S : descent_sets_with_maj(b)) {
        int sd = S.back();
        for (const auto& U : detail::subsets_upto(sd)) {
            for (int k = 0; k <= a; ++k) {
                DimensionPolynomial tail = knuth_poly(a - k, sd);
                if (tail.degree() < 0) continue;
                for (const auto& tau : enumerate_permissible(S, k, U)) {
                    BigInt wc = detail::prefix_weight_coeff(tau, k);
                    if (wc == 0) continue;
                    DimensionPolynomial term = count_poly(S, tau, U);
                    term *= tail;
                    acc += term.scaled(BigRat(wc));
                }
            }
        }
    }
    return acc;
}

// Same sum indexed with pinned positions one step above the cap instead
// of at it.  Must agree with dimension_polynomial identically.
inline DimensionPolynomial dimension_polynomial_alt(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("bidegree components must be nonnegative");
    if (b == 0) return knuth_poly(a, 0);
    DimensionPolynomial acc = DimensionPolynomial::zero();
    for (const auto& S : descent_sets_with_maj(b)) {
        int sd = S.back();
        for (const auto& U : detail::subsets_upto(sd)) {
            for (int k = 0; k <= a; ++k) {
                DimensionPolynomial tail = knuth_poly(a - k, sd);
                if (tail.degree() < 0) continue;
                for (const auto& tau : detail::prefixes_with(S, U, k + 2, k + 1)) {
                    BigInt wc = detail::prefix_weight_coeff(tau, k);
                    if (wc == 0) continue;
                    DimensionPolynomial term = count_poly(S, tau, U);
                    term *= tail;
                    acc += term.scaled(BigRat(wc));
                }
            }
        }
    }
    return acc;
}

// Comparison of the stable polynomial with the exact coefficient at
// n = a + b - 1, one step below where the polynomial takes over.
struct SharpnessReport {
    BigRat poly_value_at_boundary;
    BigInt true_dim;
    bool strict = false;  // polynomial strictly undershoots the exact value
};

inline SharpnessReport sharpness_report(int a, int b, int threads = 1) {
    if (a < 1 || b < 1) throw std::invalid_argument("sharpness is only examined for positive bidegrees");
    SharpnessReport rep;
    DimensionPolynomial p = dimension_polynomial(a, b);
    int boundary = a + b - 1;
    rep.poly_value_at_boundary = p.eval(static_cast<long>(boundary));
    rep.true_dim = dim_exact(boundary, a, b, threads);
    rep.strict = rep.poly_value_at_boundary < BigRat(rep.true_dim);
    return rep;
}

}  // namespace diagharm

#endif
