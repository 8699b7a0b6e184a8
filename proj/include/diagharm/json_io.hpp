#ifndef DIAGHARM_JSON_IO_HPP
#define DIAGHARM_JSON_IO_HPP

/* Serialization of the library's results: polynomials, bivariate
 * series, class counts, and verification reports.
 *
 * JSON is the primary format and is deterministic: ordered keys, no
 * timestamps, rationals as decimal numerator/denominator string pairs.
 * The same documents can be rendered as CSV rows or as LaTeX, the
 * latter matching the familiar closed-form table style so output can be
 * eyeballed against published tables.
 */

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "diagharm/bigint.hpp"
#include "diagharm/bivariate_series.hpp"
#include "diagharm/dimension_polynomial.hpp"
#include "diagharm/oracle.hpp"

namespace diagharm {

using ordered_json = nlohmann::ordered_json;

inline ordered_json polynomial_doc(const DimensionPolynomial& p, long stable_from) {
    ordered_json doc;
    doc["schema"] = "diagharm/1";
    doc["kind"] = "polynomial";
    doc["variable"] = "n";
    doc["stable_from"] = stable_from;
    ordered_json coeffs = ordered_json::array();
    for (int k = 0; k <= p.degree(); ++k) {
        const BigRat& c = p.coeff(static_cast<std::size_t>(k));
        coeffs.push_back({to_string(rat_num(c)), to_string(rat_den(c))});
    }
    if (p.degree() < 0) coeffs.push_back({"0", "1"});
    doc["coeffs"] = std::move(coeffs);
    return doc;
}

inline ordered_json series_doc(const BivariateSeries& s, int n) {
    ordered_json doc;
    doc["kind"] = "series";
    doc["n"] = n;
    ordered_json entries = ordered_json::array();
    for (const auto& [key, c] : s.entries()) {
        ordered_json e;
        e["q"] = key.first;
        e["t"] = key.second;
        e["c"] = to_string(c);
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    doc["total"] = to_string(s.total());
    return doc;
}

inline ordered_json count_doc(int n, const BigInt& value) {
    ordered_json doc;
    doc["schema"] = "diagharm/1";
    doc["kind"] = "count";
    doc["n"] = n;
    doc["value"] = to_string(value);
    return doc;
}

inline ordered_json report_doc(const VerificationReport& rep) {
    ordered_json doc;
    doc["kind"] = "report";
    doc["subject"] = rep.subject;
    ordered_json checks = ordered_json::array();
    for (const CheckRecord& c : rep.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["expected"] = c.expected;
        e["actual"] = c.actual;
        e["pass"] = c.pass;
        checks.push_back(std::move(e));
    }
    doc["checks"] = std::move(checks);
    doc["passed"] = rep.passed();
    doc["failed"] = rep.failed();
    doc["status"] = rep.ok() ? "pass" : "fail";
    return doc;
}

inline DimensionPolynomial parse_polynomial_doc(const ordered_json& doc, long* stable_from = nullptr) {
    if (doc.at("kind").get<std::string>() != "polynomial")
        throw std::invalid_argument("document kind is not polynomial");
    if (stable_from) *stable_from = doc.at("stable_from").get<long>();
    std::vector<BigRat> coeffs;
    for (const auto& pair : doc.at("coeffs")) {
        BigInt num(pair.at(0).get<std::string>());
        BigInt den(pair.at(1).get<std::string>());
        coeffs.emplace_back(num, den);
    }
    return DimensionPolynomial(std::move(coeffs));
}

inline BivariateSeries parse_series_doc(const ordered_json& doc, int* n = nullptr) {
    if (doc.at("kind").get<std::string>() != "series")
        throw std::invalid_argument("document kind is not series");
    if (n) *n = doc.at("n").get<int>();
    BivariateSeries s;
    for (const auto& e : doc.at("entries"))
        s.add(e.at("q").get<int>(), e.at("t").get<int>(), BigInt(e.at("c").get<std::string>()));
    return s;
}

/* Rational coefficient as LaTeX: integers plain, fractions as \frac,
 * sign pulled out front by the caller.
 */
namespace detail {

inline std::string latex_abs_coeff(const BigRat& c) {
    BigInt num = rat_num(c);
    if (num < 0) num = -num;
    const BigInt& den = rat_den(c);
    if (den == 1) return to_string(num);
    return "\\frac{" + to_string(num) + "}{" + to_string(den) + "}";
}

}  // namespace detail

// Closed form in the table style: descending powers, zero terms
// dropped, unit coefficients silent next to a power of n.
inline std::string latex_polynomial(const DimensionPolynomial& p) {
    if (p.degree() < 0) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const BigRat& c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        bool negative = rat_num(c) < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        BigRat abs = negative ? BigRat(-c) : c;
        bool unit = (abs == 1);
        if (!unit || k == 0) out += detail::latex_abs_coeff(c);
        if (k >= 1) out += "n";
        if (k >= 2) out += "^{" + std::to_string(k) + "}";
    }
    return out;
}

inline std::string latex_series(const BivariateSeries& s) {
    int qmax = 0;
    int tmax = 0;
    for (const auto& [key, c] : s.entries()) {
        qmax = std::max(qmax, key.first);
        tmax = std::max(tmax, key.second);
    }
    std::ostringstream out;
    out << "\\begin{array}{r|";
    for (int q = 0; q <= qmax; ++q) out << "r";
    out << "}\n";
    for (int q = 0; q <= qmax; ++q) out << " & q^{" << q << "}";
    out << " \\\\\\hline\n";
    for (int t = 0; t <= tmax; ++t) {
        out << "t^{" << t << "}";
        for (int q = 0; q <= qmax; ++q) {
            BigInt c = s.coeff(q, t);
            out << " & " << (c == 0 ? std::string(".") : to_string(c));
        }
        out << " \\\\\n";
    }
    out << "\\end{array}\n";
    return out.str();
}

inline std::string latex_report(const VerificationReport& rep) {
    std::ostringstream out;
    out << "\\begin{tabular}{llll}\n";
    out << "check & expected & actual & status \\\\\\hline\n";
    for (const CheckRecord& c : rep.checks)
        out << c.name << " & " << c.expected << " & " << c.actual << " & "
            << (c.pass ? "pass" : "fail") << " \\\\\n";
    out << "\\end{tabular}\n";
    return out.str();
}

inline std::string csv_polynomial(const DimensionPolynomial& p, long stable_from) {
    std::ostringstream out;
    out << "power,numerator,denominator\n";
    for (int k = 0; k <= std::max(p.degree(), 0); ++k) {
        const BigRat c = k <= p.degree() ? p.coeff(static_cast<std::size_t>(k)) : BigRat(0);
        out << k << "," << to_string(rat_num(c)) << "," << to_string(rat_den(c)) << "\n";
    }
    out << "# stable_from," << stable_from << "\n";
    return out.str();
}

inline std::string csv_series(const BivariateSeries& s) {
    std::ostringstream out;
    out << "q,t,coefficient\n";
    for (const auto& [key, c] : s.entries())
        out << key.first << "," << key.second << "," << to_string(c) << "\n";
    out << "# total," << to_string(s.total()) << "\n";
    return out.str();
}

inline std::string csv_report(const VerificationReport& rep) {
    std::ostringstream out;
    out << "name,expected,actual,pass\n";
    for (const CheckRecord& c : rep.checks)
        out << c.name << "," << c.expected << "," << c.actual << "," << (c.pass ? "1" : "0") << "\n";
    return out.str();
}

}  // namespace diagharm

#endif
