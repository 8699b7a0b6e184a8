#ifndef DIAGHARM_REFERENCE_TABLE_HPP
#define DIAGHARM_REFERENCE_TABLE_HPP

/* Independently tabulated closed forms for the stable dimension
 * polynomials with both bidegrees at most 3. These were frozen from a
 * separate exact computation and serve as regression goldens for the
 * assembled formula; nothing in the library derives from them.
 */

#include <map>
#include <utility>
#include <vector>

#include "diagharm/bigint.hpp"
#include "diagharm/dimension_polynomial.hpp"

namespace diagharm {

inline const std::map<std::pair<int, int>, DimensionPolynomial>& stable_dimension_table() {
    static const std::map<std::pair<int, int>, DimensionPolynomial> table = [] {
        std::map<std::pair<int, int>, DimensionPolynomial> t;
        auto put = [&](int a, int b, std::vector<BigRat> coeffs) {
            DimensionPolynomial p(std::move(coeffs));
            t.emplace(std::make_pair(a, b), p);
            if (a != b) t.emplace(std::make_pair(b, a), std::move(p));
        };
        auto r = [](long num, long den) { return BigRat(num, den); };
        put(0, 0, {r(1, 1)});
        put(1, 0, {r(-1, 1), r(1, 1)});
        put(2, 0, {r(-1, 1), r(-1, 2), r(1, 2)});
        put(3, 0, {r(0, 1), r(-7, 6), r(0, 1), r(1, 6)});
        put(1, 1, {r(0, 1), r(-2, 1), r(1, 1)});
        put(2, 1, {r(1, 1), r(-3, 2), r(-1, 1), r(1, 2)});
        put(3, 1, {r(1, 1), r(2, 3), r(-5, 3), r(-1, 6), r(1, 6)});
        put(2, 2, {r(1, 1), r(1, 1), r(-7, 4), r(-1, 2), r(1, 4)});
        put(3, 2, {r(1, 1), r(13, 6), r(1, 12), r(-5, 4), r(-1, 12), r(1, 12)});
        put(3, 3, {r(-1, 1), r(3, 1), r(19, 9), r(-1, 2), r(-23, 36), r(0, 1), r(1, 36)});
        return t;
    }();
    return table;
}

}  // namespace diagharm

#endif
