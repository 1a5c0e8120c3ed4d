#pragma once

#include <complex>
#include <vector>

#include "fosc/fock.hpp"
#include "fosc/hamiltonian.hpp"

namespace fosc {

/// Spectral phases f(E_n) for n = 0..nmax, precomputed once per (f, nmax).
struct evolution_plan {
    hamiltonian_function f;
    std::vector<double> level_values; // f(n + 1/2)

    evolution_plan(hamiltonian_function f_, int nmax);
};

/// c_n -> c_n e^{-i t f(n+1/2)}; diagonal and exactly norm-preserving.
fock_state evolve(const fock_state& state, const evolution_plan& plan, double t);
fock_state evolve(const fock_state& state, const hamiltonian_function& f, double t);

/// Energy argument used for the classical label motion: the classical energy
/// of the phase point z = sqrt(2) alpha is |alpha|^2; the quantum mean adds
/// the vacuum offset 1/2.
enum class energy_convention { classical, quantum_mean };

double classical_label_energy(coherent_label label, energy_convention conv);

/// alpha_cl(t) = alpha0 exp(-i t f'(H0_cl)).
std::complex<double> evolve_label(coherent_label label, const hamiltonian_function& f,
                                  double t, energy_convention conv);

/// 1 - |<alpha_cl(t)| e^{-i t f(H0)} |alpha0>|; zero iff quantum evolution
/// keeps the state on the coherent family at the classically evolved label.
double coherence_defect(coherent_label alpha0, const hamiltonian_function& f, double t,
                        energy_convention conv = energy_convention::classical);

/// |<psi(0)|psi(t)>| = |sum_n |c_n|^2 e^{-i t f(E_n)}|.
double autocorrelation(const fock_state& state0, const hamiltonian_function& f, double t);

/// Distance between the quantum means (<X>, <P>) of the evolved state and the
/// classically evolved phase point sqrt(2) alpha_cl(t).
double ehrenfest_gap(coherent_label alpha0, const hamiltonian_function& f, double t,
                     energy_convention conv = energy_convention::classical);

struct dephasing_series {
    std::vector<double> times;
    std::vector<double> defect;
    std::vector<double> autocorrelation;
    std::vector<double> ehrenfest_gap;
    std::vector<observable_report> observables;
};

/// Uniform-grid sweep of the three diagnostics (grid 0, dt, 2dt, ...; the
/// endpoint t_max is appended when it falls off the grid).
dephasing_series dephasing_scan(coherent_label alpha0, const hamiltonian_function& f,
                                double t_max, double dt,
                                energy_convention conv = energy_convention::classical);

/// Same sweep with an explicit truncation choice.
dephasing_series dephasing_scan(coherent_label alpha0, const hamiltonian_function& f,
                                double t_max, double dt, energy_convention conv, int nmax,
                                truncation_policy policy);

/// Times of three-point local maxima of the autocorrelation that reach the
/// threshold. No interpolation; empty result allowed.
std::vector<double> find_revivals(const dephasing_series& series, double threshold);

} // namespace fosc
