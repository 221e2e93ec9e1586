#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinorlab/report.hpp"

namespace spinorlab {

/// Configuration shared by all suites.  Suites read what they need:
/// `m` is the dimension (the Clifford suite runs every dimension up to m),
/// `samples` the number of seeded sample points or random draws, `h` the
/// finite-difference step, `h_list` the step ladder for convergence fits.
struct SuiteConfig {
    int m = 3;
    int samples = 20;
    std::uint64_t seed = 7;
    double h = 1e-4;
    std::vector<double> h_list = {1e-3, 5e-4, 2.5e-4};

    /// Accepts {"m":..,"samples":..,"seed":..,"h":..,"h_list":[..]};
    /// "h" may also be an array, which sets h_list.
    static SuiteConfig from_json(const std::string& text);
    std::string to_json() const;
};

/// The available suite names, in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one named verification suite.  Deterministic given config (one
/// seeded generator drives all random points and spinors); unknown names
/// and malformed configs are rejected.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config = {});

} // namespace spinorlab
