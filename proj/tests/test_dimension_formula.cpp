#include <catch2/catch_amalgamated.hpp>

#include "diagharm/bivariate_series.hpp"
#include "diagharm/dimension_formula.hpp"
#include "diagharm/dimension_polynomial.hpp"
#include "diagharm/reference_table.hpp"

using namespace diagharm;

TEST_CASE("assembled polynomials match the tabulated closed forms") {
    const auto& table = stable_dimension_table();
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            DimensionPolynomial p = dimension_polynomial(a, b);
            INFO("bidegree (" << a << ", " << b << ")");
            CHECK(p == table.at({a, b}));
            CHECK(p.degree() == ((a == 0 && b == 0) ? 0 : a + b));
        }
    }
}

TEST_CASE("the two assembly indexings agree") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            CHECK(dimension_polynomial(a, b) == dimension_polynomial_alt(a, b));
}

TEST_CASE("tail-only bidegrees reduce to the factorial coefficient") {
    for (int a = 0; a <= 6; ++a) CHECK(dimension_polynomial(a, 0) == knuth_poly(a, 0));
}

TEST_CASE("stable values equal the exact coefficients") {
    for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 2; ++b) {
            DimensionPolynomial p = dimension_polynomial(a, b);
            for (int n = a + b; n <= 6; ++n) {
                if (n < 1) continue;
                INFO("bidegree (" << a << ", " << b << ") at n = " << n);
                CHECK(p.eval(static_cast<long>(n)) == BigRat(dim_exact(n, a, b)));
            }
        }
    }
}

TEST_CASE("the polynomial undershoots just below the stable range") {
    SharpnessReport rep = sharpness_report(1, 1);
    CHECK(rep.poly_value_at_boundary == BigRat(-1));
    CHECK(rep.true_dim == 0);
    CHECK(rep.strict);

    rep = sharpness_report(1, 2);
    CHECK(rep.poly_value_at_boundary == BigRat(-2));
    CHECK(rep.true_dim == 0);
    CHECK(rep.strict);

    rep = sharpness_report(2, 3);
    CHECK(rep.poly_value_at_boundary == BigRat(-5));
    CHECK(rep.strict);

    CHECK_THROWS_AS(sharpness_report(0, 1), std::invalid_argument);
}
