#ifndef DIAGHARM_BIGINT_HPP
#define DIAGHARM_BIGINT_HPP

/* Exact arithmetic scalars used throughout the library.
 *
 * Every computation in this project is exact: integer coefficients are
 * arbitrary precision and rationals are kept in lowest terms with a
 * positive denominator (both guaranteed by the Boost backends).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace diagharm {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const BigRat& r) { return rat_den(r) == 1; }

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const BigRat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// n! as an exact integer.
inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace diagharm

#endif
