#include "fosc/runner.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <vector>

#include <json.hpp>

#include "fosc/classical.hpp"
#include "fosc/evolution.hpp"
#include "fosc/fock.hpp"
#include "fosc/io.hpp"
#include "fosc/nogo.hpp"

namespace fosc {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* const known_commands =
    "evolve, classical, dephase, nogo, identity-check, wavefunction, revival";

template <typename T>
const T& need(const std::optional<T>& v, const char* name) {
    if (!v)
        throw config_error(std::string("missing required parameter '") + name + "'");
    return *v;
}

template <typename T>
void take(std::optional<T>& slot, const std::optional<T>& value) {
    if (value)
        slot = value;
}

std::vector<double> parse_radii(const std::string& text) {
    std::vector<double> radii;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        if (item.empty())
            throw config_error("bad radii list '" + text + "'");
        std::size_t used = 0;
        double r = 0.0;
        try {
            r = std::stod(item, &used);
        } catch (const std::exception&) {
            throw config_error("bad radius '" + item + "'");
        }
        if (used != item.size() || !std::isfinite(r))
            throw config_error("bad radius '" + item + "'");
        radii.push_back(r);
        pos = comma + 1;
        if (comma == text.size())
            break;
    }
    if (radii.empty())
        throw config_error("radii list is empty");
    return radii;
}

energy_convention parse_convention(const std::string& text) {
    if (text == "classical")
        return energy_convention::classical;
    if (text == "quantum-mean" || text == "quantum_mean")
        return energy_convention::quantum_mean;
    throw config_error("unknown energy convention '" + text +
                       "' (expected classical or quantum-mean)");
}

struct truncation_choice {
    int nmax;
    truncation_policy policy;
};

truncation_choice resolve_truncation(const run_config& cfg, double alpha_mag) {
    const int rule = truncation_level(alpha_mag);
    if (!cfg.nmax)
        return {rule, truncation_policy::enforce};
    const int manual = *cfg.nmax;
    if (manual < 0)
        throw config_error("nmax must be >= 0");
    if (manual < rule && !cfg.force_nmax.value_or(false))
        throw config_error("nmax = " + std::to_string(manual) +
                           " is below the truncation rule (need >= " + std::to_string(rule) +
                           "); pass --force-nmax to accept the truncation loss");
    return {manual, manual < rule ? truncation_policy::force : truncation_policy::enforce};
}

/// Artifacts default to stdout; the summary line goes to stderr so that
/// piped CSV/JSON stays clean.
void emit_text(const std::optional<std::string>& path, const std::string& body) {
    if (path)
        write_text_atomic(*path, body);
    else
        std::cout << body;
}

void summary(const std::string& line) { std::cerr << line << '\n'; }

std::string destination(const std::optional<std::string>& path) {
    return path ? *path : std::string("stdout");
}

ordered_json witness_json(const std::optional<existence_witness>& w) {
    if (!w)
        return nullptr;
    return ordered_json{{"n", w->n}, {"m", w->m}, {"r", w->r}, {"ratio", w->ratio}};
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int run_classical(const run_config& cfg) {
    const hamiltonian_function f = resolve_f_spec(cfg.f.value_or("id"));
    const phase_point z0{parse_complex(need(cfg.z0, "z0"))};
    const double tmax = need(cfg.tmax, "tmax");
    const double dt = need(cfg.dt, "dt");
    const std::string method = cfg.method.value_or("analytic");

    classical_trajectory traj;
    if (method == "rk4")
        traj = integrate_eom(f, z0, tmax, dt);
    else if (method == "analytic")
        traj = analytic_trajectory(f, z0, tmax, dt);
    else
        throw config_error("unknown method '" + method + "' (expected analytic or rk4)");

    double rmin = std::abs(traj.samples.front().z), rmax = rmin;
    for (const auto& s : traj.samples) {
        rmin = std::min(rmin, std::abs(s.z));
        rmax = std::max(rmax, std::abs(s.z));
    }
    emit_text(cfg.out, trajectory_csv(traj));
    summary("classical(" + method + ", f=" + f.name() + "): " +
            std::to_string(traj.samples.size()) + " samples to " + destination(cfg.out) +
            ", |z| drift " + format_full(rmax - rmin));
    return 0;
}

struct scan_setup {
    hamiltonian_function f;
    coherent_label label;
    double tmax;
    double dt;
    energy_convention conv;
    truncation_choice trunc;
    double threshold;
};

scan_setup make_scan_setup(const run_config& cfg) {
    hamiltonian_function f = resolve_f_spec(cfg.f.value_or("id"));
    const coherent_label label{parse_complex(need(cfg.alpha, "alpha"))};
    const double tmax = need(cfg.tmax, "tmax");
    const double dt = need(cfg.dt, "dt");
    const energy_convention conv = parse_convention(cfg.energy_convention.value_or("classical"));
    const truncation_choice trunc = resolve_truncation(cfg, std::abs(label.alpha));
    const double threshold = cfg.threshold.value_or(0.999);
    return {std::move(f), label, tmax, dt, conv, trunc, threshold};
}

ordered_json scan_config_json(const run_config& cfg, const scan_setup& s) {
    ordered_json j;
    j["command"] = need(cfg.command, "command");
    j["f"] = cfg.f.value_or("id");
    j["alpha"] = *cfg.alpha;
    j["tmax"] = s.tmax;
    j["dt"] = s.dt;
    j["nmax"] = s.trunc.nmax;
    j["force_nmax"] = s.trunc.policy == truncation_policy::force;
    j["energy_convention"] =
        s.conv == energy_convention::classical ? "classical" : "quantum-mean";
    j["threshold"] = s.threshold;
    j["out"] = cfg.out ? ordered_json(*cfg.out) : ordered_json(nullptr);
    j["json"] = cfg.json ? ordered_json(*cfg.json) : ordered_json(nullptr);
    return j;
}

ordered_json scan_summary_json(const run_config& cfg, const scan_setup& s,
                               const dephasing_series& series) {
    const std::vector<double> revivals = find_revivals(series, s.threshold);
    std::vector<double> peaks;
    peaks.reserve(revivals.size());
    for (double t : revivals) {
        const auto it = std::find(series.times.begin(), series.times.end(), t);
        peaks.push_back(series.autocorrelation[it - series.times.begin()]);
    }
    std::size_t imax_defect = 0, imin_auto = 0;
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        if (series.defect[i] > series.defect[imax_defect])
            imax_defect = i;
        if (series.autocorrelation[i] < series.autocorrelation[imin_auto])
            imin_auto = i;
    }
    ordered_json j;
    j["f"] = s.f.name();
    j["revivals"] = revivals;
    j["revival_peaks"] = peaks;
    j["max_defect"] = series.defect[imax_defect];
    j["max_defect_time"] = series.times[imax_defect];
    j["min_autocorr"] = series.autocorrelation[imin_auto];
    j["min_autocorr_time"] = series.times[imin_auto];
    j["final_autocorr"] = series.autocorrelation.back();
    j["tail_bound"] = coherent_state(s.label, s.trunc.nmax, truncation_policy::force).tail_bound;
    j["config"] = scan_config_json(cfg, s);
    return j;
}

int run_scan(const run_config& cfg) {
    const std::string& command = *cfg.command;
    const scan_setup s = make_scan_setup(cfg);
    const dephasing_series series =
        dephasing_scan(s.label, s.f, s.tmax, s.dt, s.conv, s.trunc.nmax, s.trunc.policy);

    const bool revival_mode = command == "revival";
    if (!revival_mode || cfg.out)
        emit_text(cfg.out, dephasing_csv(series));
    if (revival_mode || cfg.json) {
        const ordered_json j = scan_summary_json(cfg, s, series);
        emit_text(cfg.json, j.dump(2) + "\n");
    }

    std::string note;
    if (s.trunc.policy == truncation_policy::force) {
        const double tail = coherent_state(s.label, s.trunc.nmax, truncation_policy::force).tail_bound;
        note = " [forced nmax=" + std::to_string(s.trunc.nmax) + ", tail bound " +
               format_full(tail) + "]";
    }
    if (command == "evolve") {
        summary("evolve(f=" + s.f.name() + "): " + std::to_string(series.times.size()) +
                " samples to " + destination(cfg.out) + ", final autocorr " +
                format_full(series.autocorrelation.back()) + note);
    } else if (command == "dephase") {
        std::size_t imax = 0;
        for (std::size_t i = 0; i < series.defect.size(); ++i)
            if (series.defect[i] > series.defect[imax])
                imax = i;
        summary("dephase(f=" + s.f.name() + "): max defect " + format_full(series.defect[imax]) +
                " at t=" + format_full(series.times[imax]) + ", " +
                std::to_string(series.times.size()) + " samples to " + destination(cfg.out) +
                note);
    } else {
        const std::vector<double> revivals = find_revivals(series, s.threshold);
        summary("revival(f=" + s.f.name() + "): " + std::to_string(revivals.size()) +
                " revivals above " + format_full(s.threshold) + " to " + destination(cfg.json) +
                note);
    }
    return 0;
}

int run_nogo(const run_config& cfg) {
    const hamiltonian_function f = resolve_f_spec(cfg.f.value_or("id"));
    const int n_max = cfg.nmax.value_or(12);
    const int k_max = cfg.kmax.value_or(8);
    const double tol = cfg.tol.value_or(1e-9);
    const double floor = cfg.floor.value_or(1e-3);
    const std::vector<double> radii = parse_radii(cfg.radii.value_or("0.5,1,2"));

    const existence_report existence = family_existence_check(f, n_max, radii, tol);
    const residual_scan_report scan =
        f.name() == "einstein_rosen" ? er_impossibility_scan(n_max, k_max, radii, floor)
                                     : winding_residual_scan(f, n_max, k_max, radii, floor);

    if (cfg.dump_residuals)
        write_text_atomic(*cfg.dump_residuals, residuals_csv(scan.samples));

    ordered_json j;
    j["f"] = f.name();
    j["verdict"] = existence.pass ? "pass" : "fail";
    j["witness"] = witness_json(existence.witness);
    j["min_residual"] = scan.min_residual;
    j["min_residual_at"] = ordered_json{{"n", scan.argmin.n},
                                        {"m", scan.argmin.m},
                                        {"k", scan.argmin.k},
                                        {"r", scan.argmin.r}};
    j["floor_satisfied"] = scan.floor_satisfied;
    j["grid"] = ordered_json{
        {"n_max", n_max}, {"k_max", k_max}, {"radii", radii}, {"tol", tol}, {"floor", floor}};
    ordered_json cj;
    cj["command"] = "nogo";
    cj["f"] = cfg.f.value_or("id");
    cj["nmax"] = n_max;
    cj["kmax"] = k_max;
    cj["tol"] = tol;
    cj["floor"] = floor;
    cj["radii"] = cfg.radii.value_or("0.5,1,2");
    cj["dump_residuals"] =
        cfg.dump_residuals ? ordered_json(*cfg.dump_residuals) : ordered_json(nullptr);
    cj["json"] = cfg.json ? ordered_json(*cfg.json) : ordered_json(nullptr);
    j["config"] = cj;

    emit_text(cfg.json, j.dump(2) + "\n");
    summary("nogo(f=" + f.name() + "): verdict " + (existence.pass ? "pass" : "fail") +
            ", min residual " + format_full(scan.min_residual) + " to " + destination(cfg.json));
    return 0;
}

int run_identity_check(const run_config& cfg) {
    const int nmax = cfg.nmax.value_or(12);
    const double R = cfg.radius.value_or(1.0);
    const int ntheta = cfg.ntheta.value_or(256);
    const int nr = cfg.nr.value_or(400);

    const identity_resolution_result res = identity_resolution_check(nmax, R, nr, ntheta);

    ordered_json j;
    j["nmax"] = res.nmax;
    j["R"] = res.radius;
    j["max_offdiag"] = res.max_offdiag;
    j["diag"] = res.diagonal();
    ordered_json cj;
    cj["command"] = "identity-check";
    cj["nmax"] = nmax;
    cj["radius"] = R;
    cj["ntheta"] = ntheta;
    cj["nr"] = nr;
    cj["json"] = cfg.json ? ordered_json(*cfg.json) : ordered_json(nullptr);
    j["config"] = cj;

    emit_text(cfg.json, j.dump(2) + "\n");
    summary("identity-check: nmax=" + std::to_string(nmax) + ", R=" + format_full(R) +
            ", M00=" + format_full(res.entry(0, 0)) + ", max offdiag " +
            format_full(res.max_offdiag) + " to " + destination(cfg.json));
    return 0;
}

int run_wavefunction(const run_config& cfg) {
    const hamiltonian_function f = resolve_f_spec(cfg.f.value_or("id"));
    const coherent_label label{parse_complex(need(cfg.alpha, "alpha"))};
    const double t = cfg.t.value_or(0.0);
    const double xmin = cfg.xmin.value_or(-8.0);
    const double xmax = cfg.xmax.value_or(8.0);
    const int nx = cfg.nx.value_or(401);
    if (nx < 2 || nx > 10000000)
        throw config_error("nx must be in [2, 1e7]");
    if (!(xmax > xmin))
        throw config_error("xmax must exceed xmin");
    const truncation_choice trunc = resolve_truncation(cfg, std::abs(label.alpha));

    const fock_state state =
        evolve(coherent_state(label, trunc.nmax, trunc.policy), f, t);
    std::vector<double> xs(nx);
    const double dx = (xmax - xmin) / (nx - 1);
    for (int i = 0; i < nx; ++i)
        xs[i] = xmin + i * dx;
    const auto psi = position_wavefunction(state, xs);

    double mass = 0.0; // trapezoid estimate of the grid norm
    for (int i = 0; i < nx; ++i) {
        const double w = (i == 0 || i == nx - 1) ? 0.5 : 1.0;
        mass += w * std::norm(psi[i]);
    }
    mass *= dx;

    emit_text(cfg.out, wavefunction_csv(xs, psi));
    summary("wavefunction(f=" + f.name() + ", t=" + format_full(t) + "): " +
            std::to_string(nx) + " points to " + destination(cfg.out) + ", grid norm " +
            format_full(mass));
    return 0;
}

int dispatch(const run_config& cfg) {
    const std::string& command = need(cfg.command, "command");
    if (command == "classical")
        return run_classical(cfg);
    if (command == "evolve" || command == "dephase" || command == "revival")
        return run_scan(cfg);
    if (command == "nogo")
        return run_nogo(cfg);
    if (command == "identity-check")
        return run_identity_check(cfg);
    if (command == "wavefunction")
        return run_wavefunction(cfg);
    throw config_error("unknown command '" + command + "' (known: " + known_commands + ")");
}

} // namespace

run_config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot read config file '" + path.string() + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error("malformed JSON in '" + path.string() + "': " + e.what());
    }
    if (!j.is_object())
        throw config_error("config file must hold a JSON object");

    run_config cfg;
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "command") {
                const auto cmd = value.get<std::string>();
                if (cmd != "evolve" && cmd != "classical" && cmd != "dephase" &&
                    cmd != "nogo" && cmd != "identity-check" && cmd != "wavefunction" &&
                    cmd != "revival")
                    throw config_error("unknown command '" + cmd +
                                       "' (known: " + known_commands + ")");
                cfg.command = cmd;
            }
            else if (key == "f")
                cfg.f = value.get<std::string>();

            else if (key == "alpha")
                cfg.alpha = value.is_number() ? format_full(value.get<double>())
                                              : value.get<std::string>();
            else if (key == "z0")
                cfg.z0 = value.is_number() ? format_full(value.get<double>())
                                           : value.get<std::string>();
            else if (key == "tmax")
                cfg.tmax = value.get<double>();
            else if (key == "dt")
                cfg.dt = value.get<double>();
            else if (key == "t")
                cfg.t = value.get<double>();
            else if (key == "nmax")
                cfg.nmax = value.get<int>();
            else if (key == "force_nmax")
                cfg.force_nmax = value.get<bool>();
            else if (key == "out")
                cfg.out = value.get<std::string>();
            else if (key == "json")
                cfg.json = value.get<std::string>();
            else if (key == "energy_convention")
                cfg.energy_convention = value.get<std::string>();
            else if (key == "radii") {
                if (value.is_array()) {
                    std::string joined;
                    for (const auto& item : value) {
                        if (!joined.empty())
                            joined += ',';
                        joined += format_full(item.get<double>());
                    }
                    cfg.radii = joined;
                } else {
                    cfg.radii = value.get<std::string>();
                }
            } else if (key == "kmax")
                cfg.kmax = value.get<int>();
            else if (key == "tol")
                cfg.tol = value.get<double>();
            else if (key == "floor")
                cfg.floor = value.get<double>();
            else if (key == "threshold")
                cfg.threshold = value.get<double>();
            else if (key == "radius")
                cfg.radius = value.get<double>();
            else if (key == "ntheta")
                cfg.ntheta = value.get<int>();
            else if (key == "nr")
                cfg.nr = value.get<int>();
            else if (key == "xmin")
                cfg.xmin = value.get<double>();
            else if (key == "xmax")
                cfg.xmax = value.get<double>();
            else if (key == "nx")
                cfg.nx = value.get<int>();
            else if (key == "method")
                cfg.method = value.get<std::string>();
            else if (key == "dump_residuals")
                cfg.dump_residuals = value.get<std::string>();
            else
                throw config_error("unknown config key '" + key + "'");
        } catch (const nlohmann::json::exception& e) {
            throw config_error("bad value for config key '" + key + "': " + e.what());
        }
    }
    return cfg;
}

run_config merge(run_config base, const run_config& overrides) {
    take(base.command, overrides.command);
    take(base.f, overrides.f);
    take(base.alpha, overrides.alpha);
    take(base.z0, overrides.z0);
    take(base.tmax, overrides.tmax);
    take(base.dt, overrides.dt);
    take(base.t, overrides.t);
    take(base.nmax, overrides.nmax);
    take(base.force_nmax, overrides.force_nmax);
    take(base.out, overrides.out);
    take(base.json, overrides.json);
    take(base.energy_convention, overrides.energy_convention);
    take(base.radii, overrides.radii);
    take(base.kmax, overrides.kmax);
    take(base.tol, overrides.tol);
    take(base.floor, overrides.floor);
    take(base.threshold, overrides.threshold);
    take(base.radius, overrides.radius);
    take(base.ntheta, overrides.ntheta);
    take(base.nr, overrides.nr);
    take(base.xmin, overrides.xmin);
    take(base.xmax, overrides.xmax);
    take(base.nx, overrides.nx);
    take(base.method, overrides.method);
    take(base.dump_residuals, overrides.dump_residuals);
    return base;
}

int run(const run_config& config) {
    try {
        return dispatch(config);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const eval_error& e) {
        std::cerr << "error: " << e.what() << " (input " << format_full(e.input()) << ")\n";
        return 3;
    } catch (const numeric_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace fosc
