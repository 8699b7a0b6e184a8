#ifndef DIAGHARM_DIMENSION_POLYNOMIAL_HPP
#define DIAGHARM_DIMENSION_POLYNOMIAL_HPP

/* Polynomials in the size variable n with exact rational coefficients.
 *
 * This file also houses the closed-form coefficient machinery built on
 * top of them:
 *
 *  - knuth_poly: the coefficient of q^k in [n]_q! written as a degree-k
 *    polynomial in n. It is a finite alternating sum of binomials whose
 *    correction terms are indexed by generalized pentagonal numbers;
 *    binomials C(n+c, b) are expanded symbolically as degree-b
 *    polynomials (falling-factorial product over b!) so the expression
 *    stays meaningful outside the range where it counts anything.
 *  - power_sum_poly / poly_sum_range: Faulhaber-style summation via
 *    Stirling numbers of the second kind, used to close telescoping
 *    recurrences of the form F(n) = F(n-1) + Q(n).
 *  - interpolate: exact Lagrange interpolation, used by the independent
 *    cross-check that recovers the same polynomials from raw dimension
 *    data.
 */

#include "diagharm/bigint.hpp"
#include "diagharm/qpolynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace diagharm {

class DimensionPolynomial {
public:
    DimensionPolynomial() = default;
    explicit DimensionPolynomial(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static DimensionPolynomial zero() { return DimensionPolynomial(); }
    static DimensionPolynomial constant(const BigRat& c) {
        return DimensionPolynomial(std::vector<BigRat>{c});
    }
    // c * n^k
    static DimensionPolynomial monomial(const BigRat& c, std::size_t k) {
        std::vector<BigRat> v(k + 1, BigRat(0));
        v[k] = c;
        return DimensionPolynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigRat>& coeffs() const { return coeffs_; }

    BigRat coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : BigRat(0);
    }

    BigRat eval(const BigRat& x) const {
        BigRat acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }
    BigRat eval(long x) const { return eval(BigRat(x)); }

    // Evaluation that is known to land on an integer (counts, dimensions).
    BigInt eval_integer(long x) const {
        BigRat v = eval(x);
        if (!is_integer(v)) throw std::logic_error("polynomial value is not an integer at " + std::to_string(x));
        return rat_num(v);
    }

    DimensionPolynomial& operator+=(const DimensionPolynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    DimensionPolynomial& operator-=(const DimensionPolynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    friend DimensionPolynomial operator+(DimensionPolynomial a, const DimensionPolynomial& b) { return a += b; }
    friend DimensionPolynomial operator-(DimensionPolynomial a, const DimensionPolynomial& b) { return a -= b; }

    friend DimensionPolynomial operator*(const DimensionPolynomial& a, const DimensionPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<BigRat> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return DimensionPolynomial(std::move(out));
    }
    DimensionPolynomial& operator*=(const DimensionPolynomial& o) { return *this = *this * o; }

    DimensionPolynomial scaled(const BigRat& c) const {
        if (c == 0) return zero();
        std::vector<BigRat> out(coeffs_);
        for (auto& v : out) v *= c;
        return DimensionPolynomial(std::move(out));
    }

    // P(n + delta), via Horner in the shifted variable.
    DimensionPolynomial shifted_argument(long delta) const {
        DimensionPolynomial acc;
        DimensionPolynomial lin({BigRat(delta), BigRat(1)});  // n + delta
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * lin;
            acc += constant(coeffs_[i]);
        }
        return acc;
    }

    friend bool operator==(const DimensionPolynomial& a, const DimensionPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigRat> coeffs_;  // coeffs_[i] multiplies n^i
};

// C(n + c, b) expanded as a polynomial in n of degree b, i.e.
// (n+c)(n+c-1)...(n+c-b+1) / b!. By convention the zero polynomial for b < 0.
inline DimensionPolynomial binomial_poly(long c, int b) {
    if (b < 0) return DimensionPolynomial::zero();
    DimensionPolynomial p = DimensionPolynomial::constant(BigRat(1));
    for (int t = 0; t < b; ++t)
        p *= DimensionPolynomial({BigRat(c - t), BigRat(1)});
    return p.scaled(BigRat(BigInt(1), factorial(static_cast<unsigned>(b))));
}

/* Coefficient of q^k in [n - shift]_q! as a polynomial in n:
 *
 *   F(m,k) = C(m+k-1,k)
 *          + sum_{j>=1} (-1)^j [ C(m+k-u_j-1, k-u_j) + C(m+k-u_j-j-1, k-u_j-j) ]
 *
 * with u_j = j(3j-1)/2, evaluated at m = n - shift. The sum is finite
 * because binomials with a negative lower index vanish. The result has
 * degree exactly k and agrees with q_coeff(q_factorial(m), k) whenever
 * m >= k; below that range it is the analytic continuation, which the
 * stabilization boundary analysis deliberately exploits.
 */
inline DimensionPolynomial knuth_poly(int k, int shift) {
    DimensionPolynomial acc = binomial_poly(k - 1 - shift, k);
    for (int j = 1;; ++j) {
        long u = static_cast<long>(j) * (3L * j - 1) / 2;
        int b1 = k - static_cast<int>(u);
        int b2 = b1 - j;
        if (b1 < 0 && b2 < 0) break;
        DimensionPolynomial term = binomial_poly(k - u - 1 - shift, b1)
                                 + binomial_poly(k - u - static_cast<long>(j) - 1 - shift, b2);
        if (j % 2 == 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

// How many correction binomials in knuth_poly(k, .) have a nonnegative
// lower index (and are therefore nonzero as polynomials).
inline int knuth_correction_term_count(int k) {
    int count = 0;
    for (int j = 1;; ++j) {
        long u = static_cast<long>(j) * (3L * j - 1) / 2;
        int b1 = k - static_cast<int>(u);
        int b2 = b1 - j;
        if (b1 < 0 && b2 < 0) break;
        if (b1 >= 0) ++count;
        if (b2 >= 0) ++count;
    }
    return count;
}

// F(m, m+1) - [q^(m+1)]([m]_q!), evaluated exactly. One past the degree
// range in which the closed form counts inversions; the discrepancy is
// the quantity the stabilization sharpness argument rests on.
inline BigInt knuth_boundary_defect(int m) {
    BigRat v = knuth_poly(m + 1, 0).eval(static_cast<long>(m));
    if (!is_integer(v)) throw std::logic_error("boundary defect is not an integer");
    return rat_num(v) - q_coeff(q_factorial(m), m + 1);
}

// Stirling numbers of the second kind, S(p, i) for 0 <= i <= p.
inline std::vector<BigInt> stirling2_row(int p) {
    std::vector<BigInt> row{BigInt(1)};  // S(0,0) = 1
    for (int m = 1; m <= p; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, BigInt(0));
        for (int i = 1; i <= m; ++i) {
            BigInt lower = (i <= m - 1) ? row[static_cast<std::size_t>(i)] : BigInt(0);
            next[static_cast<std::size_t>(i)] = BigInt(i) * lower + row[static_cast<std::size_t>(i) - 1];
        }
        row = std::move(next);
    }
    return row;
}

// sum_{i=1}^{n} i^p as a polynomial in n of degree p+1, via
// sum_i (1/i) S(p+1, i) (n)_i with falling factorials (n)_i.
inline DimensionPolynomial power_sum_poly(int p) {
    std::vector<BigInt> s = stirling2_row(p + 1);
    DimensionPolynomial acc;
    for (int i = 1; i <= p + 1; ++i) {
        DimensionPolynomial falling = DimensionPolynomial::constant(BigRat(1));
        for (int t = 0; t < i; ++t)
            falling *= DimensionPolynomial({BigRat(-t), BigRat(1)});
        acc += falling.scaled(BigRat(s[static_cast<std::size_t>(i)], BigInt(i)));
    }
    return acc;
}

// sum_{i=m}^{n} P(i) as a polynomial in n. Evaluates to 0 at n = m-1; for
// n below that the analytic continuation may go negative, which is the
// intended behavior at the stabilization boundary.
inline DimensionPolynomial poly_sum_range(const DimensionPolynomial& P, long m) {
    DimensionPolynomial G;  // sum_{i=1}^{n} P(i)
    for (std::size_t j = 0; j < P.coeffs().size(); ++j)
        G += power_sum_poly(static_cast<int>(j)).scaled(P.coeffs()[j]);
    BigRat head = 0;  // sum_{i=1}^{m-1} P(i), a constant
    if (m - 1 >= 1)
        head = G.eval(m - 1);
    else if (m - 1 < 0)
        for (long i = m; i <= 0; ++i) head -= P.eval(i);
    return G - DimensionPolynomial::constant(head);
}

// Exact Lagrange interpolation through the given (x, y) points.
inline DimensionPolynomial interpolate(const std::vector<std::pair<BigRat, BigRat>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: duplicate abscissa");
    DimensionPolynomial acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        DimensionPolynomial basis = DimensionPolynomial::constant(BigRat(1));
        BigRat denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis *= DimensionPolynomial({-points[j].first, BigRat(1)});
            denom *= points[i].first - points[j].first;
        }
        acc += basis.scaled(points[i].second / denom);
    }
    return acc;
}

}  // namespace diagharm

#endif
