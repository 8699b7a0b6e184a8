#include <catch2/catch_amalgamated.hpp>

#include "diagharm/qpolynomial.hpp"

using namespace diagharm;

static std::vector<BigInt> ints(std::initializer_list<long> xs) {
    std::vector<BigInt> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

TEST_CASE("q_integer expands to 1 + q + ... + q^(k-1)") {
    CHECK(q_integer(1).coeffs() == ints({1}));
    CHECK(q_integer(3).coeffs() == ints({1, 1, 1}));
    CHECK(q_integer(0).is_zero());
    CHECK(q_integer(-2).is_zero());
}

TEST_CASE("q_factorial small values") {
    CHECK(q_factorial(0).coeffs() == ints({1}));
    CHECK(q_factorial(1).coeffs() == ints({1}));
    CHECK(q_factorial(2).coeffs() == ints({1, 1}));
    CHECK(q_factorial(3).coeffs() == ints({1, 2, 2, 1}));
    CHECK(q_factorial(4).coeffs() == ints({1, 3, 5, 6, 5, 3, 1}));
}

TEST_CASE("q_factorial evaluates to k! at q = 1") {
    BigInt expect = 1;
    for (int k = 1; k <= 12; ++k) {
        expect *= k;
        CHECK(q_factorial(k).eval_at_one() == expect);
    }
}

TEST_CASE("q_factorial degree is k choose 2") {
    for (int k = 0; k <= 10; ++k)
        CHECK(q_factorial(k).degree() == k * (k - 1) / 2);
}

TEST_CASE("q_coeff out of range is zero") {
    QPolynomial p = q_factorial(3);
    CHECK(q_coeff(p, -1) == 0);
    CHECK(q_coeff(p, 2) == 2);
    CHECK(q_coeff(p, 4) == 0);
    CHECK(q_coeff(QPolynomial::zero(), 0) == 0);
}

TEST_CASE("polynomial arithmetic") {
    QPolynomial a({BigInt(1), BigInt(1)});          // 1 + q
    QPolynomial b({BigInt(1), BigInt(-1)});         // 1 - q
    CHECK((a * b).coeffs() == ints({1, 0, -1}));
    CHECK((a + b).coeffs() == ints({2}));
    CHECK(a * QPolynomial::one() == a);
    CHECK((a * QPolynomial::zero()).is_zero());

    QPolynomial c = a;
    c += b;
    CHECK(c.coeffs() == ints({2}));
    c *= a;
    CHECK(c.coeffs() == ints({2, 2}));
}

TEST_CASE("trailing zeros are trimmed") {
    QPolynomial p({BigInt(3), BigInt(0), BigInt(0)});
    CHECK(p.degree() == 0);
    QPolynomial diff = QPolynomial({BigInt(1), BigInt(1)}) + QPolynomial({BigInt(1), BigInt(-1)});
    CHECK(diff.degree() == 0);
}

TEST_CASE("q-integers multiply like a q-factorial product") {
    QPolynomial prod = QPolynomial::one();
    for (int k = 1; k <= 6; ++k) prod *= q_integer(k);
    CHECK(prod == q_factorial(6));
}
