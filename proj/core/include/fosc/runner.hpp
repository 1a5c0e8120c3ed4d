#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace fosc {

/// One batch experiment, assembled from a JSON config file and/or CLI flags.
/// Every field is optional so that flag-over-file precedence is explicit;
/// defaults are applied when the experiment runs.
struct run_config {
    std::optional<std::string> command; // evolve|classical|dephase|nogo|identity-check|wavefunction|revival
    std::optional<std::string> f;       // builtin selector or expression in x
    std::optional<std::string> alpha;   // complex literal a+bi
    std::optional<std::string> z0;      // complex literal a+bi
    std::optional<double> tmax;
    std::optional<double> dt;
    std::optional<double> t;            // snapshot time (wavefunction)
    std::optional<int> nmax;            // fock truncation override / nogo level range / basis size
    std::optional<bool> force_nmax;
    std::optional<std::string> out;     // CSV artifact path; stdout when absent
    std::optional<std::string> json;    // JSON report path; stdout when absent
    std::optional<std::string> energy_convention; // classical|quantum-mean
    std::optional<std::string> radii;   // comma-separated list
    std::optional<int> kmax;
    std::optional<double> tol;
    std::optional<double> floor;
    std::optional<double> threshold;
    std::optional<double> radius;
    std::optional<int> ntheta;
    std::optional<int> nr;
    std::optional<double> xmin;
    std::optional<double> xmax;
    std::optional<int> nx;
    std::optional<std::string> method;  // analytic|rk4
    std::optional<std::string> dump_residuals; // residual CSV path
};

/// Strict JSON loader: same keys as the flags; unknown keys are errors.
run_config load_config(const std::filesystem::path& path);

/// Fields set in `overrides` win over `base` (flags override file values).
run_config merge(run_config base, const run_config& overrides);

/// Executes the experiment: writes the artifacts, prints a one-line summary,
/// and returns the process exit status (0 ok, 2 validation error, 3 numeric
/// failure).
int run(const run_config& config);

} // namespace fosc
