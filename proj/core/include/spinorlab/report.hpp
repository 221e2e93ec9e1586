#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spinorlab {

struct CheckRecord {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;  // optional, e.g. fitted slopes

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

/// Result of one verification suite.  `pass` of each record is
/// residual <= tolerance; the suite passes when every record does.
/// Everything except wall_ms is deterministic for a fixed config and seed.
struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<double> fd_steps;
    double wall_ms = 0.0;
    std::string config_json;  // echo of the effective configuration
    std::vector<CheckRecord> checks;

    bool pass() const;
    double max_residual() const;
};

enum class ReportFormat { Json, Table, Csv };

ReportFormat report_format_from_string(const std::string& name);

/// json: stable-keyed and round-trippable; table: fixed-width human output
/// with a pass/fail summary line; csv: header plus one row per check.
std::string emit_report(const SuiteResult& result, ReportFormat format);

/// Inverse of emit_report for the json format.
SuiteResult suite_result_from_json(const std::string& text);

} // namespace spinorlab
