#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fosc/hamiltonian.hpp"

namespace fosc {

/// Classical state z = x + ip on the complex plane; |z|^2 = 2 H0.
struct phase_point {
    std::complex<double> z;

    double x() const { return z.real(); }
    double p() const { return z.imag(); }
    double energy() const { return 0.5 * std::norm(z); }
};

struct trajectory_sample {
    double t;
    std::complex<double> z;
};

struct classical_trajectory {
    std::vector<trajectory_sample> samples;
    std::string f_name;
    std::complex<double> z0;
};

/// Harmonic evolution z0 e^{-iT}.
phase_point evolve_h0(phase_point z0, double T);

/// Energy-dependent time remap T(t) = f'(H0) t with H0 = |z0|^2/2.
double reparametrized_time(const hamiltonian_function& f, phase_point z0, double t);

/// Closed-form evolution under f(H0): z0 exp(-i t f'(|z0|^2/2)).
phase_point evolve_f(const hamiltonian_function& f, phase_point z0, double t);

/// Fixed-step RK4 integration of dx/dt = f'(H0) p, dp/dt = -f'(H0) x with H0
/// recomputed from the current state at every stage. Independent of the
/// closed-form path; serves as its cross-check. Samples at 0, dt, 2dt, ...
/// and lands exactly on t_max (final step shortened when needed).
/// Throws numeric_error if the state turns non-finite.
classical_trajectory integrate_eom(const hamiltonian_function& f, phase_point z0,
                                   double t_max, double dt);

/// Closed-form trajectory on the same time grid integrate_eom would use.
classical_trajectory analytic_trajectory(const hamiltonian_function& f, phase_point z0,
                                         double t_max, double dt);

} // namespace fosc
