// spinorlab: runs the named verification suites and emits machine- or
// human-readable reports.
//
//   spinorlab <suite> [--m N] [--samples N] [--seed N] [--h H]
//             [--config cfg.json] [--format json|table|csv] [--out FILE]
//
// Exit code 0 iff every check of the suite passes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinorlab/report.hpp"
#include "spinorlab/suites.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinorlab verification suites"};
    app.set_help_flag("--help", "print usage");

    std::string suite;
    std::string config_path;
    std::string format = "table";
    std::string out_path;
    int m = -1;
    int samples = -1;
    std::int64_t seed = -1;
    double h = -1.0;

    std::string suite_list;
    for (const auto& n : spinorlab::suite_names()) suite_list += (suite_list.empty() ? "" : ", ") + n;

    std::string suite_positional;
    app.add_option("SUITE", suite_positional, "suite to run (" + suite_list + ")");
    app.add_option("--suite", suite, "suite to run (alternative to the positional form)");
    app.add_option("--config", config_path, "JSON config file; flags override its entries");
    app.add_option("--m", m, "dimension (clifford: maximal dimension)");
    app.add_option("--samples", samples, "seeded sample points / random draws");
    app.add_option("--seed", seed, "RNG seed")->envname("SPINORLAB_SEED");
    app.add_option("--h", h, "finite-difference step");
    app.add_option("--format", format, "json, table or csv")->check(CLI::IsMember({"json", "table", "csv"}));
    app.add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (suite.empty()) suite = suite_positional;
        if (suite.empty()) throw std::invalid_argument("no suite given; expected one of: " + suite_list);

        spinorlab::SuiteConfig cfg;
        if (!config_path.empty()) cfg = spinorlab::SuiteConfig::from_json(read_file(config_path));
        if (m > 0) cfg.m = m;
        if (samples > 0) cfg.samples = samples;
        if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
        if (h > 0.0) cfg.h = h;

        const spinorlab::SuiteResult result = spinorlab::run_suite(suite, cfg);
        const std::string report = spinorlab::emit_report(result, spinorlab::report_format_from_string(format));

        if (out_path.empty()) {
            std::cout << report;
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
            out << report;
        }
        return result.pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "spinorlab: " << e.what() << "\n";
        return 2;
    }
}
