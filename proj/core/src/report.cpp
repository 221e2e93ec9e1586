#include "spinorlab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace spinorlab {

bool SuiteResult::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

double SuiteResult::max_residual() const {
    double r = 0.0;
    for (const auto& c : checks) r = std::max(r, c.residual);
    return r;
}

ReportFormat report_format_from_string(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "table") return ReportFormat::Table;
    if (name == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown report format '" + name + "' (expected json, table or csv)");
}

namespace {

nlohmann::ordered_json to_json(const SuiteResult& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["pass"] = r.pass();
    j["seed"] = r.seed;
    j["fd_steps"] = r.fd_steps;
    j["wall_ms"] = r.wall_ms;
    j["config"] = r.config_json.empty() ? nlohmann::ordered_json::object()
                                        : nlohmann::ordered_json::parse(r.config_json);
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        j["checks"].push_back(std::move(jc));
    }
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

} // namespace

std::string emit_report(const SuiteResult& result, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json:
            return to_json(result).dump(2) + "\n";
        case ReportFormat::Csv: {
            std::ostringstream out;
            out << "name,residual,tolerance,pass\n";
            char buf[64];
            for (const auto& c : result.checks) {
                std::snprintf(buf, sizeof(buf), "%.17g,%.17g", c.residual, c.tolerance);
                out << csv_escape(c.name) << ',' << buf << ',' << (c.pass ? "true" : "false") << '\n';
            }
            return out.str();
        }
        case ReportFormat::Table: {
            std::ostringstream out;
            std::size_t width = 24;
            for (const auto& c : result.checks) width = std::max(width, c.name.size() + 2);
            char line[256];
            std::snprintf(line, sizeof(line), "%-*s %12s %12s  %s\n", static_cast<int>(width), "check", "residual",
                          "tolerance", "status");
            out << "suite: " << result.suite << "  (seed " << result.seed << ")\n" << line;
            out << std::string(width + 34, '-') << '\n';
            for (const auto& c : result.checks) {
                std::snprintf(line, sizeof(line), "%-*s %12.3e %12.3e  %s\n", static_cast<int>(width), c.name.c_str(),
                              c.residual, c.tolerance, c.pass ? "pass" : "FAIL");
                out << line;
                if (!c.detail.empty()) out << std::string(width + 2, ' ') << c.detail << '\n';
            }
            const std::size_t passed =
                static_cast<std::size_t>(std::count_if(result.checks.begin(), result.checks.end(),
                                                       [](const CheckRecord& c) { return c.pass; }));
            std::snprintf(line, sizeof(line), "suite %s: %s (%zu/%zu checks, %.1f ms)\n", result.suite.c_str(),
                          result.pass() ? "PASS" : "FAIL", passed, result.checks.size(), result.wall_ms);
            out << line;
            return out.str();
        }
    }
    throw std::logic_error("unreachable");
}

SuiteResult suite_result_from_json(const std::string& text) {
    const auto j = nlohmann::ordered_json::parse(text);
    SuiteResult r;
    r.suite = j.at("suite").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.fd_steps = j.at("fd_steps").get<std::vector<double>>();
    r.wall_ms = j.at("wall_ms").get<double>();
    r.config_json = j.at("config").dump();
    for (const auto& jc : j.at("checks")) {
        CheckRecord c;
        c.name = jc.at("name").get<std::string>();
        c.residual = jc.at("residual").get<double>();
        c.tolerance = jc.at("tolerance").get<double>();
        c.pass = jc.at("pass").get<bool>();
        if (jc.contains("detail")) c.detail = jc.at("detail").get<std::string>();
        r.checks.push_back(std::move(c));
    }
    return r;
}

} // namespace spinorlab
