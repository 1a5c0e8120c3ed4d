// Acceptance suite: prints one pass/fail line per criterion and exits
// non-zero when any criterion fails. Expected values marked "pinned" were
// frozen from independent high-precision evaluation before the build.
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "fosc/classical.hpp"
#include "fosc/evolution.hpp"
#include "fosc/fock.hpp"
#include "fosc/hamiltonian.hpp"
#include "fosc/nogo.hpp"

using namespace fosc;

namespace {

constexpr double pi = std::numbers::pi;

int failures = 0;

void report(int index, const std::string& label, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", index, label.c_str(),
                detail.c_str());
    if (!pass)
        ++failures;
}

template <typename Fn>
void criterion(int index, const std::string& label, Fn&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(index, label, false, std::string("exception: ") + e.what());
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

const std::vector<std::complex<double>> alpha_set = {{0.5, 0.0}, {1.0, 0.5}, {2.0, 0.0}};

// --- criterion bodies -------------------------------------------------------

void coherent_closure() {
    const auto id = identity_hamiltonian();
    double worst = 0.0;
    for (const auto& a : alpha_set)
        for (int i = 0; i < 50; ++i)
            worst = std::max(worst, coherence_defect({a}, id, 20.0 * i / 49.0));
    report(1, "coherent closure under the harmonic generator", worst <= 1e-10,
           "max defect " + fmt(worst) + " <= 1e-10");
}

void uncertainty_saturation() {
    double worst_x = 0.0, worst_p = 0.0, worst_h = 0.0;
    for (const auto& a : alpha_set) {
        const auto r = expectations(coherent_state({a}));
        worst_x = std::max(worst_x, std::abs(std::sqrt(r.var_x) - 1.0 / std::numbers::sqrt2));
        worst_p = std::max(worst_p, std::abs(std::sqrt(r.var_p) - 1.0 / std::numbers::sqrt2));
        worst_h = std::max(worst_h, std::abs(std::sqrt(r.var_h0) - std::abs(a)));
    }
    report(2, "uncertainty saturation",
           worst_x <= 1e-10 && worst_p <= 1e-10 && worst_h <= 1e-9,
           "dX err " + fmt(worst_x) + ", dP err " + fmt(worst_p) + ", dH0 err " + fmt(worst_h));
}

void classical_oracle_equivalence() {
    const std::vector<hamiltonian_function> fs = {
        identity_hamiltonian(), einstein_rosen_hamiltonian(), kerr_hamiltonian(0.3)};
    const std::vector<std::complex<double>> z0s = {{1.0, 0.0}, {std::sqrt(2.0), 0.0}, {2.0, 1.0}};
    double worst_final = 0.0, worst_drift = 0.0;
    for (const auto& f : fs) {
        for (const auto& z0 : z0s) {
            const auto traj = integrate_eom(f, {z0}, 10.0, 1e-3);
            const auto exact = evolve_f(f, {z0}, 10.0);
            worst_final = std::max(worst_final, std::abs(traj.samples.back().z - exact.z));
            for (const auto& s : traj.samples)
                worst_drift = std::max(worst_drift, std::abs(std::abs(s.z) - std::abs(z0)));
        }
    }
    report(3, "closed form vs RK4 oracle", worst_final <= 1e-6 && worst_drift < 1e-8,
           "final gap " + fmt(worst_final) + " <= 1e-6, drift " + fmt(worst_drift) + " < 1e-8");
}

void ehrenfest_identity() {
    const auto id = identity_hamiltonian();
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i)
        worst = std::max(worst, ehrenfest_gap({2.0}, id, 100.0 * i / 400.0));
    report(4, "Ehrenfest match for the harmonic generator", worst <= 1e-8,
           "max gap " + fmt(worst) + " <= 1e-8");
}

void kerr_exact_revival() {
    const auto kerr = kerr_hamiltonian(1.0);
    const double at_pi = autocorrelation(coherent_state({2.0}), kerr, pi);

    const auto series = dephasing_scan({2.0}, kerr, 4.0, 1e-3);
    const auto revivals = find_revivals(series, 0.999);
    double nearest = 1e9;
    for (double t : revivals)
        nearest = std::min(nearest, std::abs(t - pi));

    report(5, "Kerr exact revival", at_pi >= 1.0 - 1e-10 && nearest <= 1e-3,
           "autocorr(pi) = 1 - " + fmt(1.0 - at_pi) + ", revival within " + fmt(nearest) +
               " of pi");
}

void er_dephasing_floor() {
    // independent direct-summation oracle: Poisson weights and spectral phases
    // only, no Fock-state machinery
    const double lambda = 2.0;
    const int nmax = 37;
    std::vector<double> weights(nmax + 1);
    double logw = -lambda; // log P_0
    weights[0] = std::exp(logw);
    for (int n = 1; n <= nmax; ++n) {
        logw += std::log(lambda) - std::log(double(n));
        weights[n] = std::exp(logw);
    }
    const double fp_cl = std::exp(-lambda / 2.0);
    double oracle_max = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double t = 0.05 * i;
        std::complex<double> acc = 0.0;
        for (int n = 0; n <= nmax; ++n) {
            const double phase = n * t * fp_cl - t * 2.0 * (1.0 - std::exp(-(n + 0.5) / 2.0));
            acc += weights[n] * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        oracle_max = std::max(oracle_max, 1.0 - std::abs(acc));
    }
    const double pinned = 0.6364741238543936; // frozen from the same oracle pre-build
    const bool oracle_consistent = std::abs(oracle_max - pinned) <= 1e-9;

    const auto series = dephasing_scan({std::sqrt(2.0)}, einstein_rosen_hamiltonian(), 50.0, 0.05);
    double max_defect = 0.0;
    for (double d : series.defect)
        max_defect = std::max(max_defect, d);

    report(6, "Einstein-Rosen dephasing floor",
           oracle_consistent && max_defect >= 0.9 * pinned,
           "max defect " + fmt(max_defect) + " >= " + fmt(0.9 * pinned) + ", oracle recomputed " +
               fmt(oracle_max));
}

void no_go_verdicts() {
    const double radii[] = {0.5, 1.0, 2.0};
    const auto id = family_existence_check(identity_hamiltonian(), 10, radii, 1e-9);
    const auto er = family_existence_check(einstein_rosen_hamiltonian(), 10, radii, 1e-9);
    const auto kerr = family_existence_check(kerr_hamiltonian(1.0), 10, radii, 1e-9);
    const bool ok = id.pass && !er.pass && er.witness.has_value() && !kerr.pass &&
                    kerr.witness.has_value();
    report(7, "coherent-family existence verdicts", ok,
           std::string("identity pass, exponential/Kerr fail with witnesses (") +
               (er.witness ? "er@r=" + fmt(er.witness->r) : "er missing") + ", " +
               (kerr.witness ? "kerr@r=" + fmt(kerr.witness->r) : "kerr missing") + ")");
}

void er_residual_pin() {
    const double res = er_residual(0, 1, 1, 0.0).residual;
    const auto scan = er_impossibility_scan(5, 3, std::vector<double>{0.0, 1.0});
    report(8, "winding residual pin and scan", std::abs(res - 2.43244) <= 1e-4 &&
                                                   scan.min_residual > 0.0,
           "residual(0,1,1,0) = " + fmt(res) + ", scan min " + fmt(scan.min_residual) + " > 0");
}

void identity_resolution() {
    const auto small = identity_resolution_check(12, 1.0, 400, 256);
    const double m00_err = std::abs(small.entry(0, 0) - (1.0 - std::exp(-1.0)));

    const auto large = identity_resolution_check(12, std::sqrt(40.0), 400, 256);
    double diag_err = 0.0;
    for (int n = 0; n <= 5; ++n)
        diag_err = std::max(diag_err, std::abs(large.entry(n, n) - 1.0));

    report(9, "resolution of identity",
           m00_err <= 1e-6 && small.max_offdiag < 1e-8 && diag_err <= 1e-6,
           "M00 err " + fmt(m00_err) + ", offdiag " + fmt(small.max_offdiag) + ", R^2=40 diag err " +
               fmt(diag_err));
}

void parser_derivative_integrity() {
    const char* specs[] = {"x", "2*(1-exp(-x/2))", "0.5*(x-0.5)*(x-1.5)"};
    const double h = 1e-4;
    double worst = 0.0;
    for (const char* spec : specs) {
        const auto f = resolve_f_spec(spec);
        for (int i = 0; i < 100; ++i) {
            const double x = 0.1 + (20.0 - 0.1) * i / 99.0;
            const double fd = (f.value(x + h) - f.value(x - h)) / (2.0 * h);
            const double d = f.derivative(x);
            worst = std::max(worst, std::abs(d - fd) / (1.0 + std::abs(d)));
        }
    }
    report(10, "parser and symbolic derivative integrity", worst <= 1e-6,
           "max relative FD gap " + fmt(worst) + " <= 1e-6");
}

} // namespace

int main() {
    criterion(1, "coherent closure under the harmonic generator", coherent_closure);
    criterion(2, "uncertainty saturation", uncertainty_saturation);
    criterion(3, "closed form vs RK4 oracle", classical_oracle_equivalence);
    criterion(4, "Ehrenfest match for the harmonic generator", ehrenfest_identity);
    criterion(5, "Kerr exact revival", kerr_exact_revival);
    criterion(6, "Einstein-Rosen dephasing floor", er_dephasing_floor);
    criterion(7, "coherent-family existence verdicts", no_go_verdicts);
    criterion(8, "winding residual pin and scan", er_residual_pin);
    criterion(9, "resolution of identity", identity_resolution);
    criterion(10, "parser and symbolic derivative integrity", parser_derivative_integrity);

    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
