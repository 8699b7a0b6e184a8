#ifndef DIAGHARM_COMMANDS_HPP
#define DIAGHARM_COMMANDS_HPP

/* Command implementations behind the CLI, kept free of argument-parsing
 * so they can be exercised directly in tests. Each returns the payload
 * document plus the process exit status (0 success, 1 failed
 * verification); bad requests throw and the binary maps that to 2.
 */

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagharm/bivariate_series.hpp"
#include "diagharm/count_recursion.hpp"
#include "diagharm/json_io.hpp"
#include "diagharm/oracle.hpp"
#include "diagharm/verify.hpp"

namespace diagharm {

struct Config {
    int max_n_schedules = 10;  // permutation enumeration cap (n!)
    int max_n_parking = 8;     // parking-function / brute-force cap ((n+1)^(n-1))
    int threads = 1;
};

inline Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    ordered_json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw std::runtime_error("config file " + path + " is not valid JSON: " + e.what());
    }
    Config cfg;
    if (doc.contains("max_n_schedules")) cfg.max_n_schedules = doc.at("max_n_schedules").get<int>();
    if (doc.contains("max_n_parking")) cfg.max_n_parking = doc.at("max_n_parking").get<int>();
    if (doc.contains("threads")) cfg.threads = doc.at("threads").get<int>();
    return cfg;
}

struct OutputDocument {
    ordered_json payload;
    int status = 0;
};

inline OutputDocument cmd_hilbert(int n, const std::string& method, const Config& cfg) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    OutputDocument out;
    if (method == "schedules") {
        if (n > cfg.max_n_schedules)
            throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the schedules bound " +
                                        std::to_string(cfg.max_n_schedules) +
                                        " (config key max_n_schedules)");
        out.payload = series_doc(hilbert_schedules(n, cfg.threads), n);
    } else if (method == "parking") {
        if (n > cfg.max_n_parking)
            throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the parking bound " +
                                        std::to_string(cfg.max_n_parking) + " (config key max_n_parking)");
        out.payload = series_doc(hilbert_parking(n), n);
    } else {
        throw std::invalid_argument("unknown method \"" + method + "\"; expected schedules or parking");
    }
    return out;
}

inline OutputDocument cmd_dimpoly(int a, int b, const std::string& method, const Config& cfg) {
    if (a < 0 || b < 0) throw std::invalid_argument("bidegree components must be nonnegative");
    OutputDocument out;
    DimensionPolynomial p;
    if (method == "recursion") {
        p = dimension_polynomial(a, b);
    } else if (method == "interpolate") {
        p = interpolate_dimension_poly(a, b, cfg.max_n_schedules, cfg.threads);
    } else {
        throw std::invalid_argument("unknown method \"" + method + "\"; expected recursion or interpolate");
    }
    out.payload = polynomial_doc(p, a + b);
    return out;
}

inline OutputDocument cmd_verify(const std::string& suite, VerifyOptions opts, const Config& cfg) {
    if (opts.threads <= 0) opts.threads = cfg.threads;
    if (opts.max_n > 0) {
        int cap = (suite == "oracle" || suite == "all") ? cfg.max_n_parking : cfg.max_n_schedules;
        if (opts.max_n > cap)
            throw std::invalid_argument(
                "max-n = " + std::to_string(opts.max_n) + " exceeds the enumeration bound " +
                std::to_string(cap) + (cap == cfg.max_n_parking ? " (config key max_n_parking)"
                                                                : " (config key max_n_schedules)"));
    } else {
        opts.max_n = std::min(8, (suite == "oracle" || suite == "all") ? cfg.max_n_parking
                                                                       : cfg.max_n_schedules);
    }
    VerificationReport rep = run_suite(suite, opts);
    OutputDocument out;
    out.payload = report_doc(rep);
    out.status = rep.ok() ? 0 : 1;
    return out;
}

inline OutputDocument cmd_count(const std::vector<int>& S, const std::vector<int>& tau,
                                const std::vector<int>& U, const std::string& mode, int n,
                                const Config& cfg) {
    CountingState st{S, tau, U};
    validate_state(st);
    OutputDocument out;
    if (mode == "poly") {
        RecursionNode node = count_tree(st);
        out.payload = polynomial_doc(node.resolved, node.first_nonzero);
    } else if (mode == "exact") {
        if (n < 0) throw std::invalid_argument("mode exact requires --n");
        if (n > cfg.max_n_parking)
            throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration bound " +
                                        std::to_string(cfg.max_n_parking) + " (config key max_n_parking)");
        out.payload = count_doc(n, BigInt(count_bruteforce(st, n)));
    } else {
        throw std::invalid_argument("unknown mode \"" + mode + "\"; expected poly or exact");
    }
    return out;
}

// Render a payload in the requested format; JSON is compact and
// deterministic, the others are readable projections.
inline std::string render_document(const ordered_json& payload, const std::string& format) {
    if (format == "json") return payload.dump() + "\n";
    std::string kind = payload.at("kind").get<std::string>();
    if (format == "csv") {
        if (kind == "polynomial") {
            long stable_from = 0;
            DimensionPolynomial p = parse_polynomial_doc(payload, &stable_from);
            return csv_polynomial(p, stable_from);
        }
        if (kind == "series") return csv_series(parse_series_doc(payload));
        if (kind == "count")
            return "n,value\n" + std::to_string(payload.at("n").get<int>()) + "," +
                   payload.at("value").get<std::string>() + "\n";
        if (kind == "report") {
            std::string out = "name,expected,actual,pass\n";
            for (const auto& c : payload.at("checks"))
                out += c.at("name").get<std::string>() + "," + c.at("expected").get<std::string>() + "," +
                       c.at("actual").get<std::string>() + "," +
                       (c.at("pass").get<bool>() ? "1" : "0") + "\n";
            return out;
        }
    }
    if (format == "latex") {
        if (kind == "polynomial") return latex_polynomial(parse_polynomial_doc(payload)) + "\n";
        if (kind == "series") return latex_series(parse_series_doc(payload));
        if (kind == "count") return payload.at("value").get<std::string>() + "\n";
        if (kind == "report") {
            VerificationReport rep;
            rep.subject = payload.at("subject").get<std::string>();
            for (const auto& c : payload.at("checks"))
                rep.add(c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                        c.at("expected").get<std::string>(), c.at("actual").get<std::string>());
            return latex_report(rep);
        }
    }
    throw std::invalid_argument("unknown output format \"" + format + "\"; expected json, csv, or latex");
}

}  // namespace diagharm

#endif
