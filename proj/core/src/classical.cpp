#include "fosc/classical.hpp"

#include <cmath>

#include "time_grid.hpp"

namespace fosc {

namespace {

constexpr std::complex<double> imag_unit{0.0, 1.0};

} // namespace

phase_point evolve_h0(phase_point z0, double T) {
    return {z0.z * std::exp(-imag_unit * T)};
}

double reparametrized_time(const hamiltonian_function& f, phase_point z0, double t) {
    return f.derivative(z0.energy()) * t;
}

phase_point evolve_f(const hamiltonian_function& f, phase_point z0, double t) {
    return evolve_h0(z0, reparametrized_time(f, z0, t));
}

classical_trajectory integrate_eom(const hamiltonian_function& f, phase_point z0,
                                   double t_max, double dt) {
    const std::vector<double> ts = detail::uniform_time_grid(t_max, dt);

    classical_trajectory traj;
    traj.f_name = f.name();
    traj.z0 = z0.z;
    traj.samples.reserve(ts.size());
    traj.samples.push_back({0.0, z0.z});

    auto deriv = [&f](double x, double p, double& dx, double& dp) {
        const double h0 = 0.5 * (x * x + p * p);
        const double w = f.derivative(h0);
        dx = w * p;
        dp = -w * x;
    };

    double x = z0.x();
    double p = z0.p();
    for (std::size_t i = 1; i < ts.size(); ++i) {
        const double h = ts[i] - ts[i - 1];
        double k1x, k1p, k2x, k2p, k3x, k3p, k4x, k4p;
        deriv(x, p, k1x, k1p);
        deriv(x + 0.5 * h * k1x, p + 0.5 * h * k1p, k2x, k2p);
        deriv(x + 0.5 * h * k2x, p + 0.5 * h * k2p, k3x, k3p);
        deriv(x + h * k3x, p + h * k3p, k4x, k4p);
        x += h * (k1x + 2.0 * k2x + 2.0 * k3x + k4x) / 6.0;
        p += h * (k1p + 2.0 * k2p + 2.0 * k3p + k4p) / 6.0;
        if (!std::isfinite(x) || !std::isfinite(p))
            throw numeric_error("integration diverged near t = " + std::to_string(ts[i]) +
                                " for f = " + f.name());
        traj.samples.push_back({ts[i], {x, p}});
    }
    return traj;
}

classical_trajectory analytic_trajectory(const hamiltonian_function& f, phase_point z0,
                                         double t_max, double dt) {
    const std::vector<double> ts = detail::uniform_time_grid(t_max, dt);
    classical_trajectory traj;
    traj.f_name = f.name();
    traj.z0 = z0.z;
    traj.samples.reserve(ts.size());
    for (double t : ts)
        traj.samples.push_back({t, evolve_f(f, z0, t).z});
    return traj;
}

} // namespace fosc
