#include "fosc/nogo.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fosc {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double distance_to_two_pi_lattice(double v) {
    return std::abs(std::remainder(v, two_pi));
}

double frequency_at(const hamiltonian_function& f, double r) {
    const double w = f.derivative(0.5 * r * r);
    if (w == 0.0)
        throw numeric_error("f'(r^2/2) vanishes at r = " + std::to_string(r) +
                            " for f = " + f.name() + "; the winding condition degenerates");
    return w;
}

} // namespace

double branch_ratio(const hamiltonian_function& f, int n, int m, double r) {
    if (n < 0 || m < 0)
        throw config_error("levels must be non-negative");
    const double w = frequency_at(f, r);
    return (f.value(level_energy(n)) - f.value(level_energy(m))) / w;
}

existence_report family_existence_check(const hamiltonian_function& f, int n_max,
                                        std::span<const double> radii, double tol) {
    if (n_max < 1)
        throw config_error("n_max must be >= 1");
    if (radii.empty())
        throw config_error("at least one radius is required");

    existence_report report;
    report.pass = true;
    report.n_max = n_max;
    report.radii.assign(radii.begin(), radii.end());
    report.tol = tol;
    for (int n = 0; n <= n_max && report.pass; ++n) {
        for (int m = n + 1; m <= n_max && report.pass; ++m) {
            for (double r : radii) {
                const double ratio = branch_ratio(f, n, m, r);
                if (std::abs(ratio - std::nearbyint(ratio)) > tol) {
                    report.pass = false;
                    report.witness = existence_witness{n, m, r, ratio};
                    break;
                }
            }
        }
    }
    return report;
}

residual_sample er_residual(int n, int m, int k, double r) {
    const double v = 4.0 * std::numbers::pi * k * std::exp(r * r / 4.0) *
                     (std::exp(-0.5 * level_energy(n)) - std::exp(-0.5 * level_energy(m)));
    return {n, m, k, r, distance_to_two_pi_lattice(v)};
}

double winding_residual(const hamiltonian_function& f, int n, int m, int k, double r) {
    return distance_to_two_pi_lattice(two_pi * k * branch_ratio(f, n, m, r));
}

namespace {

template <typename SampleFn>
residual_scan_report scan_grid(int n_max, int k_max, std::span<const double> radii,
                               double floor, SampleFn&& sample) {
    if (n_max < 1)
        throw config_error("n_max must be >= 1");
    if (k_max < 1)
        throw config_error("k_max must be >= 1");
    if (radii.empty())
        throw config_error("at least one radius is required");
    const double total = 0.5 * double(n_max + 1) * n_max * k_max * double(radii.size());
    if (total > 1e7)
        throw config_error("residual grid too large (> 1e7 samples)");

    residual_scan_report report;
    report.n_max = n_max;
    report.k_max = k_max;
    report.radii.assign(radii.begin(), radii.end());
    report.floor = floor;

    bool first = true;
    for (double r : radii) {
        for (int n = 0; n <= n_max; ++n) {
            for (int m = n + 1; m <= n_max; ++m) {
                for (int k = 1; k <= k_max; ++k) {
                    const residual_sample s = sample(n, m, k, r);
                    report.samples.push_back(s);
                    if (first || s.residual < report.min_residual) {
                        report.min_residual = s.residual;
                        report.argmin = s;
                        first = false;
                    }
                }
            }
        }
    }
    report.floor_satisfied = report.min_residual > floor;
    return report;
}

} // namespace

residual_scan_report er_impossibility_scan(int n_max, int k_max, std::span<const double> radii,
                                           double floor) {
    return scan_grid(n_max, k_max, radii, floor,
                     [](int n, int m, int k, double r) { return er_residual(n, m, k, r); });
}

residual_scan_report winding_residual_scan(const hamiltonian_function& f, int n_max, int k_max,
                                           std::span<const double> radii, double floor) {
    return scan_grid(n_max, k_max, radii, floor, [&f](int n, int m, int k, double r) {
        return residual_sample{n, m, k, r, winding_residual(f, n, m, k, r)};
    });
}

} // namespace fosc
