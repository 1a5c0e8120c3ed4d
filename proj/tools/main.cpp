// fosc: batch experiments for Hamiltonians H = f(H0) built from the harmonic
// oscillator. Subcommands map onto the library's experiment runner; a JSON
// config file may supply any parameter, with flags taking precedence.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fosc/errors.hpp"
#include "fosc/runner.hpp"

namespace {

/// Binds the shared flag set to a run_config; every option is optional so
/// that only flags the user actually set override config-file values.
void add_common_options(CLI::App& cmd, fosc::run_config& cfg) {
    cmd.add_option("--f", cfg.f,
                   "Hamiltonian f: expression in x, or id | er | kerr:chi=<real>");
    cmd.add_option("--alpha", cfg.alpha, "coherent label alpha (a+bi, plain reals ok)");
    cmd.add_option("--z0", cfg.z0, "classical phase point z0 = x+ip (a+bi)");
    cmd.add_option("--tmax", cfg.tmax, "scan end time");
    cmd.add_option("--dt", cfg.dt, "scan step");
    cmd.add_option("--t", cfg.t, "snapshot time (wavefunction)");
    cmd.add_option("--nmax", cfg.nmax,
                   "Fock truncation override (quantum commands), level range (nogo), "
                   "basis size (identity-check)");
    cmd.add_flag("--force-nmax", cfg.force_nmax, "accept nmax below the truncation rule");
    cmd.add_option("--out", cfg.out, "CSV output path (default stdout)");
    cmd.add_option("--json", cfg.json, "JSON report path (default stdout)");
    cmd.add_option("--energy-convention", cfg.energy_convention, "classical | quantum-mean");
    cmd.add_option("--radii", cfg.radii, "comma-separated radii for nogo");
    cmd.add_option("--kmax", cfg.kmax, "winding range for the residual scan");
    cmd.add_option("--tol", cfg.tol, "integer-closeness tolerance (nogo)");
    cmd.add_option("--floor", cfg.floor, "residual floor the scan asserts against");
    cmd.add_option("--threshold", cfg.threshold, "revival detection threshold");
    cmd.add_option("--radius", cfg.radius, "integration radius R (identity-check)");
    cmd.add_option("--ntheta", cfg.ntheta, "angular quadrature size");
    cmd.add_option("--nr", cfg.nr, "radial quadrature size");
    cmd.add_option("--xmin", cfg.xmin, "wavefunction grid start");
    cmd.add_option("--xmax", cfg.xmax, "wavefunction grid end");
    cmd.add_option("--nx", cfg.nx, "wavefunction grid size");
    cmd.add_option("--method", cfg.method, "classical trajectory method: analytic | rk4");
    cmd.add_option("--dump-residuals", cfg.dump_residuals, "write all residual samples (CSV)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical and quantum dynamics of Hamiltonians f(H0) of the "
                 "harmonic oscillator"};
    app.require_subcommand(0, 1);

    std::optional<std::string> config_path;
    app.add_option("--config", config_path, "JSON config file (flags override its values)");

    fosc::run_config flags;
    const char* const commands[] = {"evolve",         "classical",    "dephase", "nogo",
                                    "identity-check", "wavefunction", "revival"};
    const char* const descriptions[] = {
        "quantum evolution scan of a coherent state under f(H0)",
        "classical trajectory (closed form or RK4)",
        "coherence defect / autocorrelation / Ehrenfest scan",
        "coherent-family existence check and winding residuals",
        "resolution-of-identity quadrature in the Fock basis",
        "position-space wavefunction on a grid",
        "autocorrelation revival detection",
    };
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        CLI::App* cmd = app.add_subcommand(commands[i], descriptions[i]);
        add_common_options(*cmd, flags);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    fosc::run_config cfg;
    if (config_path) {
        try {
            cfg = fosc::load_config(*config_path);
        } catch (const fosc::config_error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
    }
    cfg = fosc::merge(cfg, flags);
    for (const CLI::App* sub : app.get_subcommands())
        cfg.command = sub->get_name();

    return fosc::run(cfg);
}
