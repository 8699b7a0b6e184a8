#ifndef DIAGHARM_QPOLYNOMIAL_HPP
#define DIAGHARM_QPOLYNOMIAL_HPP

/* Polynomials in q with arbitrary-precision integer coefficients.
 *
 * These carry the q-analog building blocks: the q-integer
 * [k]_q = 1 + q + ... + q^(k-1) and the q-factorial [k]_q! which is the
 * generating function of permutations of k letters by inversion count.
 * Storage is dense ascending; degrees stay small (at most k(k-1)/2 for
 * the q-factorials used here) so nothing fancier is warranted.
 */

#include "diagharm/bigint.hpp"

#include <cstddef>
#include <vector>

namespace diagharm {

class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPolynomial zero() { return QPolynomial(); }
    static QPolynomial one() { return QPolynomial({BigInt(1)}); }

    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
    }

    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    QPolynomial& operator+=(const QPolynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }

    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return QPolynomial(std::move(out));
    }

    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;  // coeffs_[i] multiplies q^i
};

// [k]_q = 1 + q + ... + q^(k-1); the empty sum for k = 0.
inline QPolynomial q_integer(int k) {
    if (k <= 0) return QPolynomial::zero();
    return QPolynomial(std::vector<BigInt>(static_cast<std::size_t>(k), BigInt(1)));
}

// [k]_q! = [1]_q [2]_q ... [k]_q; the empty product (1) for k = 0.
inline QPolynomial q_factorial(int k) {
    QPolynomial p = QPolynomial::one();
    for (int j = 2; j <= k; ++j) p *= q_integer(j);
    return p;
}

inline BigInt q_coeff(const QPolynomial& p, int k) {
    if (k < 0) return BigInt(0);
    return p.coeff(static_cast<std::size_t>(k));
}

}  // namespace diagharm

#endif
