#ifndef DIAGHARM_VERIFY_HPP
#define DIAGHARM_VERIFY_HPP

/* Verification suites: each runs a family of cross-checks between
 * independent computations and returns a VerificationReport.
 *
 *   table1    - assembled stable polynomials against the frozen table
 *   oracle    - schedule series against parking-function enumeration,
 *               interpolation against assembly, recursion counts
 *               against direct enumeration
 *   stability - stable-range values against exact coefficients, plus
 *               degree checks
 *   sharpness - strict undershoot just below the stable range
 *   all       - everything above, in that order
 */

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagharm/bivariate_series.hpp"
#include "diagharm/count_recursion.hpp"
#include "diagharm/dimension_formula.hpp"
#include "diagharm/json_io.hpp"
#include "diagharm/oracle.hpp"
#include "diagharm/reference_table.hpp"

namespace diagharm {

struct VerifyOptions {
    int max_n = -1;  // -1: suite default
    int a = -1;      // sharpness only; -1: sweep
    int b = -1;
    int threads = 1;
};

namespace detail {

inline std::string poly_text(const DimensionPolynomial& p) {
    std::string s = latex_polynomial(p);
    return s.empty() ? "0" : s;
}

inline std::string pair_tag(int a, int b) {
    return "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
}

}  // namespace detail

inline VerificationReport verify_table1() {
    VerificationReport rep;
    rep.subject = "table1";
    for (int b = 0; b <= 3; ++b) {
        for (int a = 0; a <= 3; ++a) {
            DimensionPolynomial got = dimension_polynomial(a, b);
            const DimensionPolynomial& want = stable_dimension_table().at({a, b});
            rep.add("stable polynomial " + detail::pair_tag(a, b), got == want,
                    detail::poly_text(want), detail::poly_text(got));
        }
    }
    return rep;
}

inline VerificationReport verify_oracle(const VerifyOptions& opts) {
    VerificationReport rep;
    rep.subject = "oracle";
    int max_n = opts.max_n > 0 ? opts.max_n : 8;
    for (int n = 1; n <= max_n; ++n) {
        BivariateSeries sched = hilbert_schedules(n, opts.threads);
        BivariateSeries park = hilbert_parking(n);
        rep.add("series n=" + std::to_string(n), sched == park,
                "schedule and parking series identical",
                sched == park ? "identical" : "coefficient tables differ");
    }
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3 - a; ++b) {
            DimensionPolynomial fitted = interpolate_dimension_poly(a, b, max_n >= 2 * (a + b) ? max_n : 2 * (a + b),
                                                                   opts.threads);
            DimensionPolynomial assembled = dimension_polynomial(a, b);
            rep.add("interpolation " + detail::pair_tag(a, b), fitted == assembled,
                    detail::poly_text(assembled), detail::poly_text(fitted));
        }
    }
    std::vector<CountingState> classes{
        {{1}, {1}, {1}},
        {{2}, {1, 2}, {}},
        {{2}, {1, 2}, {1}},
        {{1, 2}, {1, 1}, {1, 2}},
        {{3}, {1, 1, 1}, {1, 2, 3}},
    };
    for (const CountingState& st : classes) {
        DimensionPolynomial p = count_poly(st);
        long fnz = first_nonzero(st);
        bool pass = true;
        for (int n = static_cast<int>(fnz); n <= std::min(max_n, 7); ++n)
            if (BigRat(count_bruteforce(st, n)) != p.eval(static_cast<long>(n))) pass = false;
        std::string tag = "count class S={";
        for (std::size_t i = 0; i < st.S.size(); ++i)
            tag += (i ? "," : "") + std::to_string(st.S[i]);
        tag += "}";
        rep.add(tag, pass, "recursion equals enumeration", pass ? "equal" : "differ");
    }
    return rep;
}

inline VerificationReport verify_stability(const VerifyOptions& opts) {
    VerificationReport rep;
    rep.subject = "stability";
    int max_n = opts.max_n > 0 ? opts.max_n : 8;
    for (int b = 0; b <= 3; ++b) {
        for (int a = 0; a <= 3; ++a) {
            DimensionPolynomial p = dimension_polynomial(a, b);
            int want_deg = (a == 0 && b == 0) ? 0 : a + b;
            rep.add("degree " + detail::pair_tag(a, b), std::to_string(want_deg),
                    std::to_string(p.degree()));
            bool pass = true;
            std::string detail_text = "match";
            for (int n = std::max(a + b, 1); n <= max_n; ++n) {
                BigRat got = p.eval(static_cast<long>(n));
                BigRat want = BigRat(dim_exact(n, a, b, opts.threads));
                if (got != want) {
                    pass = false;
                    detail_text = "mismatch at n=" + std::to_string(n);
                    break;
                }
            }
            rep.add("stable values " + detail::pair_tag(a, b), pass,
                    "polynomial equals exact coefficient for n in [" +
                        std::to_string(std::max(a + b, 1)) + "," + std::to_string(max_n) + "]",
                    detail_text);
        }
    }
    return rep;
}

inline VerificationReport verify_sharpness(const VerifyOptions& opts) {
    VerificationReport rep;
    rep.subject = "sharpness";
    std::vector<std::pair<int, int>> targets;
    if (opts.a > 0 && opts.b > 0) {
        targets.emplace_back(opts.a, opts.b);
    } else {
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) targets.emplace_back(a, b);
    }
    for (auto [a, b] : targets) {
        SharpnessReport sr = sharpness_report(a, b, opts.threads);
        rep.add("undershoot " + detail::pair_tag(a, b), sr.strict,
                "P(" + std::to_string(a + b - 1) + ") < exact dimension",
                "P=" + to_string(sr.poly_value_at_boundary) + ", exact=" + to_string(sr.true_dim));
    }
    return rep;
}

inline VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts) {
    if (suite == "table1") return verify_table1();
    if (suite == "oracle") return verify_oracle(opts);
    if (suite == "stability") return verify_stability(opts);
    if (suite == "sharpness") return verify_sharpness(opts);
    if (suite == "all") {
        VerificationReport rep;
        rep.subject = "all";
        for (const VerificationReport& part :
             {verify_table1(), verify_oracle(opts), verify_stability(opts), verify_sharpness(opts)})
            rep.checks.insert(rep.checks.end(), part.checks.begin(), part.checks.end());
        return rep;
    }
    throw std::invalid_argument("unknown verification suite \"" + suite +
                                "\"; expected table1, oracle, stability, sharpness, or all");
}

}  // namespace diagharm

#endif
