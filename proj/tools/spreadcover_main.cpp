#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spreadcover/bounds.hpp"
#include "spreadcover/cover.hpp"
#include "spreadcover/edge_ideal.hpp"
#include "spreadcover/errors.hpp"
#include "spreadcover/exact.hpp"
#include "spreadcover/orbits.hpp"
#include "spreadcover/sequences.hpp"
#include "spreadcover/serialize.hpp"
#include "spreadcover/table.hpp"

namespace {

using namespace spreadcover;

SearchLimits default_limits() {
    SearchLimits lim;
    if (const char* env = std::getenv("SPREADCOVER_TIME_BUDGET")) {
        int seconds = std::atoi(env);
        if (seconds > 0) lim.time_budget_seconds = seconds;
    }
    return lim;
}

ReportFormat parse_report_format(const std::string& name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw CLI::ValidationError("format", "expected text, json, or csv");
}

int run_bounds(int n, int d, bool greedy, bool exact, bool ggr_rational,
               const std::string& format) {
    if (ggr_rational) {
        Rational r = ggr_rho_upper_exact(n, d);
        std::cout << r.num << "/" << r.den << "\n";
        return 0;
    }
    BoundReport report = bound_report(n, d, greedy, exact, default_limits());
    std::cout << render_bound_report(report, parse_report_format(format));
    return 0;
}

int run_orbits(int n, int d) {
    std::cout << "orbit  size  class\n";
    for (const auto& o : partitions(d, n)) {
        std::cout << o.to_string() << "  " << orbit_size(o) << "  "
                  << orbit_kind_name(classify_orbit(o)) << "\n";
    }
    return 0;
}

int run_cover_greedy(int n, int d, const std::string& out_path) {
    CliqueCover c = greedy_cover(n, d);
    std::string payload = cover_to_json(c);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << payload;
    }
    std::cerr << "greedy cover of S_" << n << "(" << d << "): " << c.size()
              << " cliques\n";
    return 0;
}

int run_cover_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    CliqueCover c = cover_from_json(buf.str());
    CoverReport report = verify_cover(c);
    std::cout << "{\"valid\": " << (report.valid ? "true" : "false")
              << ", \"size\": " << c.size() << ", \"missing\": [";
    for (std::size_t i = 0; i < report.missing.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << '"' << report.missing[i].to_string() << '"';
    }
    std::cout << "]}\n";
    return report.valid ? 0 : 1;
}

int run_exact_alpha(int n, int d, double time_budget) {
    SearchLimits lim = default_limits();
    if (time_budget > 0) lim.time_budget_seconds = time_budget;
    MonomialGraph g(n, d, lim.max_vertices);
    std::cout << alpha_result_to_json(max_independent_set(g, lim));
    return 0;
}

int run_exact_rho(int n, int d, double time_budget) {
    SearchLimits lim = default_limits();
    if (time_budget > 0) lim.time_budget_seconds = time_budget;
    std::cout << rho_result_to_json(min_upward_clique_cover(n, d, lim));
    return 0;
}

int run_seq_verify(int max_d) {
    Section3Report report = verify_section3(max_d);
    for (const auto& check : report.checks) {
        std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name;
        if (!check.detail.empty()) std::cout << "  (" << check.detail << ")";
        std::cout << "\n";
    }
    return report.all_passed ? 0 : 1;
}

int run_seq_a053307(int d, const std::string& method) {
    if (method == "enumerate") {
        std::cout << a053307_enumerate(d) << "\n";
    } else if (method == "burnside") {
        std::cout << a053307_burnside(d) << "\n";
    } else if (method == "gf") {
        std::cout << expand_a053307_gf(d + 1).coefficients[d] << "\n";
    } else {
        throw CLI::ValidationError("method", "expected enumerate, burnside, or gf");
    }
    return 0;
}

int run_table(int n, int d_min, int d_max, const std::string& columns,
              const std::string& format) {
    TableSpec spec;
    spec.n = n;
    spec.d_min = d_min;
    spec.d_max = d_max;
    spec.limits = default_limits();
    std::istringstream in(columns);
    std::string name;
    while (std::getline(in, name, ',')) spec.columns.push_back(parse_table_column(name));
    if (format == "text") spec.format = TableFormat::Text;
    else if (format == "csv") spec.format = TableFormat::Csv;
    else if (format == "json") spec.format = TableFormat::Json;
    else throw CLI::ValidationError("format", "expected text, csv, or json");
    std::cout << emit_table(spec);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spreading and covering numbers of the monomial graph S_n(d)"};
    app.require_subcommand(1);

    int n = 3, d = 3, d_min = 2, d_max = 10, max_d = 40;
    double time_budget = 0;
    bool greedy = false, exact = false, ggr_rational = false;
    std::string format = "text", out_path, file_path, columns = "GGR,greedy",
                method = "enumerate";

    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form and computed bounds");
    bounds_cmd->add_option("--n", n, "number of variables")->required();
    bounds_cmd->add_option("--d", d, "degree")->required();
    bounds_cmd->add_flag("--greedy", greedy, "include the greedy cover size");
    bounds_cmd->add_flag("--exact", exact, "include exact search values");
    bounds_cmd->add_flag("--ggr-rational", ggr_rational,
                         "print the exact GGR upper bound as a fraction");
    bounds_cmd->add_option("--format", format, "text, json, or csv");

    auto* cover_cmd = app.add_subcommand("cover", "upward clique covers");
    cover_cmd->require_subcommand(1);
    auto* cover_greedy = cover_cmd->add_subcommand("greedy", "run the greedy cover");
    cover_greedy->add_option("--n", n)->required();
    cover_greedy->add_option("--d", d)->required();
    cover_greedy->add_option("--out", out_path, "write the cover JSON here");
    auto* cover_verify = cover_cmd->add_subcommand("verify", "validate a cover file");
    cover_verify->add_option("--file", file_path)->required();

    auto* exact_cmd = app.add_subcommand("exact", "brute-force oracles");
    exact_cmd->require_subcommand(1);
    auto* exact_alpha = exact_cmd->add_subcommand("alpha", "independence number");
    exact_alpha->add_option("--n", n)->required();
    exact_alpha->add_option("--d", d)->required();
    exact_alpha->add_option("--time", time_budget, "time budget in seconds");
    auto* exact_rho = exact_cmd->add_subcommand("rho", "minimum upward clique cover");
    exact_rho->add_option("--n", n)->required();
    exact_rho->add_option("--d", d)->required();
    exact_rho->add_option("--time", time_budget, "time budget in seconds");

    auto* orbits_cmd = app.add_subcommand("orbits", "list Sym(n)-orbits");
    orbits_cmd->add_option("--n", n)->required();
    orbits_cmd->add_option("--d", d)->required();

    auto* seq_cmd = app.add_subcommand("seq", "integer sequence checks");
    seq_cmd->require_subcommand(1);
    auto* seq_verify = seq_cmd->add_subcommand("verify", "cross-check all oracles");
    seq_verify->add_option("--max-d", max_d, "largest degree to check");
    auto* seq_a = seq_cmd->add_subcommand("a053307", "one term of A053307");
    seq_a->add_option("--d", d)->required();
    seq_a->add_option("--method", method, "enumerate, burnside, or gf");

    auto* table_cmd = app.add_subcommand("table", "bound comparison tables");
    table_cmd->add_option("--n", n)->required();
    table_cmd->add_option("--d-min", d_min)->required();
    table_cmd->add_option("--d-max", d_max)->required();
    table_cmd->add_option("--columns", columns, "comma-separated column list");
    table_cmd->add_option("--format", format, "text, csv, or json");

    auto* export_cmd = app.add_subcommand("export-ideal", "edge ideal generators");
    export_cmd->add_option("--n", n)->required();
    export_cmd->add_option("--d", d)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bounds_cmd->parsed())
            return run_bounds(n, d, greedy, exact, ggr_rational, format);
        if (cover_greedy->parsed()) return run_cover_greedy(n, d, out_path);
        if (cover_verify->parsed()) return run_cover_verify(file_path);
        if (exact_alpha->parsed()) return run_exact_alpha(n, d, time_budget);
        if (exact_rho->parsed()) return run_exact_rho(n, d, time_budget);
        if (orbits_cmd->parsed()) return run_orbits(n, d);
        if (seq_verify->parsed()) return run_seq_verify(max_d);
        if (seq_a->parsed()) return run_seq_a053307(d, method);
        if (table_cmd->parsed())
            return run_table(n, d_min, d_max, columns, format);
        if (export_cmd->parsed()) {
            std::cout << export_edge_ideal(n, d);
            return 0;
        }
        std::cerr << "missing subcommand\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
