#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fosc/hamiltonian.hpp"

namespace fosc {

/// Truncated state over energy eigenstates |0>..|nmax>. Constructed states
/// carry an upper bound on the probability mass discarded by truncation.
struct fock_state {
    std::vector<std::complex<double>> amplitudes;
    double tail_bound = 0.0;

    int nmax() const { return static_cast<int>(amplitudes.size()) - 1; }
    double norm2() const;
};

/// Annihilation-operator eigenvalue alpha. The corresponding classical phase
/// point is z = sqrt(2) alpha, so that <X> = Re z and <P> = Im z.
struct coherent_label {
    std::complex<double> alpha;

    double mean_occupation() const { return std::norm(alpha); }
    std::complex<double> phase_point_z() const { return std::sqrt(2.0) * alpha; }
};

/// Smallest admissible truncation for a coherent state of amplitude |alpha|:
/// ceil(|a|^2 + 10|a| + 20); keeps the Poisson tail below 1e-12 for |a| <= 5.
int truncation_level(double alpha_mag);

enum class truncation_policy {
    enforce, // refuse nmax below the truncation rule
    force,   // accept any nmax >= 0; tail_bound reports the damage
};

/// c_n = e^{-|a|^2/2} a^n / sqrt(n!) via the stable recurrence
/// c_n = c_{n-1} a / sqrt(n); tail_bound from the Poisson tail beyond nmax.
fock_state coherent_state(coherent_label label, int nmax,
                          truncation_policy policy = truncation_policy::enforce);
fock_state coherent_state(coherent_label label); // nmax from the truncation rule

struct observable_report {
    double mean_x = 0.0;
    double mean_p = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    double mean_h0 = 0.0;
    double var_h0 = 0.0;
};

/// <X>, <P>, variances and H0 moments from the tridiagonal ladder-operator
/// matrix elements <m|X|n> = (sqrt(n) d_{m,n-1} + sqrt(n+1) d_{m,n+1})/sqrt(2),
/// <m|P|n> = i (sqrt(n+1) d_{m,n+1} - sqrt(n) d_{m,n-1})/sqrt(2).
observable_report expectations(const fock_state& state);

/// (a c)_n = sqrt(n+1) c_{n+1}; drops the top level.
std::vector<std::complex<double>> apply_annihilation(const fock_state& state);

/// psi(x) = sum c_n phi_n(x) with the Hermite-function recurrence
/// phi_0 = pi^{-1/4} e^{-x^2/2}, phi_1 = sqrt(2) x phi_0,
/// phi_{n+1} = sqrt(2/(n+1)) x phi_n - sqrt(n/(n+1)) phi_{n-1}.
std::vector<std::complex<double>> position_wavefunction(const fock_state& state,
                                                        std::span<const double> xs);

struct identity_resolution_result {
    int nmax = 0;
    double radius = 0.0;
    int ntheta = 0;
    int nr = 0;
    std::vector<double> matrix; // (nmax+1)^2 row-major, real parts
    double max_offdiag = 0.0;   // max |M_mn| over m != n, imaginary part included

    double entry(int m, int n) const { return matrix[static_cast<std::size_t>(m) * (nmax + 1) + n]; }
    std::vector<double> diagonal() const;
};

/// Quadrature of (1/pi) \int_{|alpha|<=R} |alpha><alpha| d^2alpha in the Fock
/// basis: trapezoid rule in theta (exact angular selection for
/// ntheta > 2 nmax), Gauss-Legendre in r. Expected M_mn -> delta_mn P(n+1, R^2).
identity_resolution_result identity_resolution_check(int nmax, double R, int nr, int ntheta);

} // namespace fosc
