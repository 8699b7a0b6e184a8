/* Command-line front end: bigraded Hilbert series of the diagonal
 * coinvariant spaces, stable dimension polynomials, descent-class
 * counts, and the cross-checking verification suites.
 *
 * Results print as deterministic JSON by default; --format csv|latex
 * selects readable projections. Exit status: 0 on success, 1 when a
 * verification suite reports failures, 2 on bad usage or out-of-bound
 * requests.
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "diagharm/commands.hpp"

namespace {

// Comma-separated positive integers, or the literal "none" for the
// empty set (so an empty U is distinguishable from a forgotten flag).
std::vector<int> parse_set(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    if (text == "none") return out;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            int value = std::stoi(item, &used);
            if (used != item.size() || value < 1) throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::exception&) {
            throw std::invalid_argument(flag + " must be a comma-separated list of positive integers or the literal \"none\", got \"" + text + "\"");
        }
    }
    if (out.empty())
        throw std::invalid_argument(flag + " must be a comma-separated list of positive integers or the literal \"none\", got \"" + text + "\"");
    return out;
}

void emit(const diagharm::OutputDocument& doc, const std::string& format, const std::string& out_path) {
    std::string text = diagharm::render_document(doc.payload, format);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write to " + out_path);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bigraded dimensions of diagonal coinvariant spaces"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    std::string config_path;
    int threads = 0;
    app.add_option("--format", format, "output format: json, csv, or latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.add_option("--threads", threads, "worker threads for the permutation enumeration");
    app.add_option("--config", config_path, "JSON config with enumeration bounds and thread count");

    auto* hilbert = app.add_subcommand("hilbert", "bivariate coefficient table of the Hilbert series");
    hilbert->fallthrough();
    int hilbert_n = -1;
    std::string hilbert_method = "schedules";
    hilbert->add_option("--n", hilbert_n, "number of variables pairs")->required();
    hilbert->add_option("--method", hilbert_method, "schedules or parking");

    auto* dimpoly = app.add_subcommand("dimpoly", "stable dimension polynomial for one bidegree");
    dimpoly->fallthrough();
    int dim_a = -1;
    int dim_b = -1;
    std::string dim_method = "recursion";
    dimpoly->add_option("--a", dim_a, "q-degree")->required();
    dimpoly->add_option("--b", dim_b, "t-degree")->required();
    dimpoly->add_option("--method", dim_method, "recursion or interpolate");

    auto* verify = app.add_subcommand("verify", "run a cross-checking suite");
    verify->fallthrough();
    std::string suite = "all";
    int verify_max_n = -1;
    int verify_a = -1;
    int verify_b = -1;
    verify->add_option("suite", suite, "table1, oracle, stability, sharpness, or all");
    verify->add_option("--max-n", verify_max_n, "largest length to check");
    verify->add_option("--a", verify_a, "restrict sharpness to this q-degree");
    verify->add_option("--b", verify_b, "restrict sharpness to this t-degree");

    auto* count = app.add_subcommand("count", "size of one descent class with pinned weights");
    count->fallthrough();
    std::string count_S;
    std::string count_tau;
    std::string count_U = "none";
    std::string count_mode = "poly";
    int count_n = -1;
    count->add_option("--S", count_S, "descent positions, comma separated, or none")->required();
    count->add_option("--tau", count_tau, "weight prefix, comma separated, or none")->required();
    count->add_option("--U", count_U, "positions where the weight is only a lower bound");
    count->add_option("--mode", count_mode, "poly (closed form) or exact (enumerate at --n)");
    count->add_option("--n", count_n, "length for mode exact");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Usage problems are exit 2; --help lands here too and stays 0.
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        diagharm::Config cfg;
        if (!config_path.empty()) cfg = diagharm::load_config(config_path);
        if (threads > 0) cfg.threads = threads;

        diagharm::OutputDocument doc;
        if (*hilbert) {
            doc = diagharm::cmd_hilbert(hilbert_n, hilbert_method, cfg);
        } else if (*dimpoly) {
            doc = diagharm::cmd_dimpoly(dim_a, dim_b, dim_method, cfg);
        } else if (*verify) {
            diagharm::VerifyOptions opts;
            opts.max_n = verify_max_n;
            opts.a = verify_a;
            opts.b = verify_b;
            opts.threads = cfg.threads;
            doc = diagharm::cmd_verify(suite, opts, cfg);
        } else {
            doc = diagharm::cmd_count(parse_set(count_S, "--S"), parse_set(count_tau, "--tau"),
                                      parse_set(count_U, "--U"), count_mode, count_n, cfg);
        }
        emit(doc, format, out_path);
        return doc.status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
