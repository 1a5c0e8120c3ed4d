#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fosc/hamiltonian.hpp"

namespace fosc {

/// (f(E_n) - f(E_m)) / f'(r^2/2). A single-valued coherent family requires
/// this to be an integer for all level pairs and all radii.
/// Throws numeric_error when f'(r^2/2) = 0 (the condition degenerates).
double branch_ratio(const hamiltonian_function& f, int n, int m, double r);

struct existence_witness {
    int n = 0;
    int m = 0;
    double r = 0.0;
    double ratio = 0.0;
};

struct existence_report {
    bool pass = false;
    std::optional<existence_witness> witness; // first violation, lexicographic
    int n_max = 0;
    std::vector<double> radii;
    double tol = 0.0;
};

/// pass iff branch_ratio is within tol of an integer for every pair
/// n < m <= n_max and every radius.
existence_report family_existence_check(const hamiltonian_function& f, int n_max,
                                        std::span<const double> radii, double tol);

struct residual_sample {
    int n = 0;
    int m = 0;
    int k = 0; // winding
    double r = 0.0;
    double residual = 0.0; // distance to the nearest multiple of 2 pi, in [0, pi]
};

/// Einstein-Rosen consistency residual: distance of
/// v = 4 pi k e^{r^2/4} (e^{-(n+1/2)/2} - e^{-(m+1/2)/2}) to 2 pi Z.
/// Dedicated closed-form path; cross-checked against winding_residual.
residual_sample er_residual(int n, int m, int k, double r);

/// General single-valuedness residual for arbitrary f: distance of
/// 2 pi k branch_ratio(f, n, m, r) to 2 pi Z.
double winding_residual(const hamiltonian_function& f, int n, int m, int k, double r);

struct residual_scan_report {
    double min_residual = 0.0;
    residual_sample argmin;                // first minimizer in (r, n, m, k) order
    std::vector<residual_sample> samples;  // the full grid
    int n_max = 0;
    int k_max = 0;
    std::vector<double> radii;
    double floor = 0.0;
    bool floor_satisfied = false; // min_residual > floor on the tested grid
};

/// Exhaustive Einstein-Rosen residual scan over n < m <= n_max, 1 <= k <= k_max
/// (negative k give the same residuals) and the given radii.
residual_scan_report er_impossibility_scan(int n_max, int k_max, std::span<const double> radii,
                                           double floor = 1e-3);

/// The same scan through the general winding_residual path, for arbitrary f.
residual_scan_report winding_residual_scan(const hamiltonian_function& f, int n_max, int k_max,
                                           std::span<const double> radii, double floor = 1e-3);

} // namespace fosc
