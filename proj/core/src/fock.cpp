#include "fosc/fock.hpp"

#include <cmath>
#include <numbers>

#include "fosc/quadrature.hpp"

namespace fosc {

double fock_state::norm2() const {
    double s = 0.0;
    for (const auto& c : amplitudes)
        s += std::norm(c);
    return s;
}

int truncation_level(double alpha_mag) {
    if (!(alpha_mag >= 0.0) || alpha_mag > 1e3)
        throw config_error("bad coherent amplitude |alpha| = " + std::to_string(alpha_mag));
    return static_cast<int>(std::ceil(alpha_mag * alpha_mag + 10.0 * alpha_mag + 20.0));
}

namespace {

/// Upper bound on the Poisson(lambda) tail beyond nmax via the geometric
/// ratio bound P(N > nmax) <= P_{nmax+1} / (1 - lambda/(nmax+2)).
double poisson_tail_bound(double lambda, int nmax) {
    if (lambda == 0.0)
        return 0.0;
    const double log_p_next =
        -lambda + (nmax + 1) * std::log(lambda) - std::lgamma(nmax + 2.0);
    const double ratio = lambda / (nmax + 2.0);
    if (ratio >= 1.0)
        return 1.0; // truncation far below the mean; everything may be lost
    return std::exp(log_p_next) / (1.0 - ratio);
}

} // namespace

fock_state coherent_state(coherent_label label, int nmax, truncation_policy policy) {
    if (nmax < 0)
        throw config_error("nmax must be >= 0");
    // c_0 = e^{-|a|^2/2} must stay a normal double for the recurrence to hold
    // its relative accuracy
    if (0.5 * std::norm(label.alpha) > 700.0)
        throw config_error("|alpha| too large for double-precision amplitudes");
    const int required = truncation_level(std::abs(label.alpha));
    if (policy == truncation_policy::enforce && nmax < required)
        throw config_error("nmax = " + std::to_string(nmax) +
                           " is below the truncation rule; need nmax >= " +
                           std::to_string(required) + " for |alpha| = " +
                           std::to_string(std::abs(label.alpha)));

    fock_state state;
    state.amplitudes.resize(nmax + 1);
    state.amplitudes[0] = std::exp(-0.5 * std::norm(label.alpha));
    for (int n = 1; n <= nmax; ++n)
        state.amplitudes[n] = state.amplitudes[n - 1] * label.alpha / std::sqrt(double(n));
    state.tail_bound = poisson_tail_bound(std::norm(label.alpha), nmax);
    return state;
}

fock_state coherent_state(coherent_label label) {
    return coherent_state(label, truncation_level(std::abs(label.alpha)));
}

std::vector<std::complex<double>> apply_annihilation(const fock_state& state) {
    const int n = state.nmax();
    std::vector<std::complex<double>> out(state.amplitudes.size());
    for (int k = 0; k < n; ++k)
        out[k] = std::sqrt(double(k + 1)) * state.amplitudes[k + 1];
    return out;
}

observable_report expectations(const fock_state& state) {
    const auto& c = state.amplitudes;
    const int top = state.nmax();
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

    // X c and P c as tridiagonal applications
    std::vector<std::complex<double>> xc(top + 1), pc(top + 1);
    for (int m = 0; m <= top; ++m) {
        std::complex<double> up = (m + 1 <= top) ? std::sqrt(double(m + 1)) * c[m + 1] : 0.0;
        std::complex<double> down = (m >= 1) ? std::sqrt(double(m)) * c[m - 1] : 0.0;
        xc[m] = (up + down) * inv_sqrt2;
        pc[m] = std::complex<double>(0.0, 1.0) * (down - up) * inv_sqrt2;
    }

    observable_report r;
    double x2 = 0.0, p2 = 0.0;
    std::complex<double> mx = 0.0, mp = 0.0;
    for (int m = 0; m <= top; ++m) {
        mx += std::conj(c[m]) * xc[m];
        mp += std::conj(c[m]) * pc[m];
        x2 += std::norm(xc[m]);
        p2 += std::norm(pc[m]);
        const double e = level_energy(m);
        const double w = std::norm(c[m]);
        r.mean_h0 += e * w;
        r.var_h0 += e * e * w;
    }
    r.mean_x = mx.real();
    r.mean_p = mp.real();
    r.var_x = x2 - r.mean_x * r.mean_x;
    r.var_p = p2 - r.mean_p * r.mean_p;
    r.var_h0 -= r.mean_h0 * r.mean_h0;
    return r;
}

std::vector<std::complex<double>> position_wavefunction(const fock_state& state,
                                                        std::span<const double> xs) {
    const auto& c = state.amplitudes;
    const int top = state.nmax();
    const double norm0 = std::pow(std::numbers::pi, -0.25);

    std::vector<std::complex<double>> psi(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        double phi_prev = 0.0;
        double phi = norm0 * std::exp(-0.5 * x * x);
        std::complex<double> acc = c[0] * phi;
        for (int n = 0; n < top; ++n) {
            const double phi_next =
                std::sqrt(2.0 / (n + 1.0)) * x * phi - std::sqrt(n / (n + 1.0)) * phi_prev;
            phi_prev = phi;
            phi = phi_next;
            acc += c[n + 1] * phi;
        }
        psi[i] = acc;
    }
    return psi;
}

std::vector<double> identity_resolution_result::diagonal() const {
    std::vector<double> d(nmax + 1);
    for (int n = 0; n <= nmax; ++n)
        d[n] = entry(n, n);
    return d;
}

identity_resolution_result identity_resolution_check(int nmax, double R, int nr, int ntheta) {
    if (nmax < 0 || nmax > 10000)
        throw config_error("nmax out of range");
    if (!(R > 0.0))
        throw config_error("R must be positive");
    if (nr < 16 || ntheta < 16)
        throw config_error("quadrature sizes must be >= 16");
    if (ntheta > 1000000)
        throw config_error("quadrature sizes too large");

    const double two_pi = 2.0 * std::numbers::pi;

    // The integrand factorizes in polar coordinates:
    //   M_mn = (1/pi) * A_{m-n} * I_{m+n} / sqrt(m! n!)
    //   A_k  = sum_j dtheta e^{i k theta_j}          (trapezoid, theta_j = 2pi j/ntheta)
    //   I_s  = sum_q w_q e^{-r_q^2} r_q^{s+1}        (Gauss-Legendre on [0, R])
    std::vector<std::complex<double>> angular(2 * nmax + 1);
    const double dtheta = two_pi / ntheta;
    for (int k = -nmax; k <= nmax; ++k) {
        std::complex<double> s = 0.0;
        for (int j = 0; j < ntheta; ++j) {
            const double th = dtheta * j;
            s += std::complex<double>(std::cos(k * th), std::sin(k * th));
        }
        angular[k + nmax] = s * dtheta;
    }

    const quadrature_rule rule = gauss_legendre(nr, 0.0, R);
    std::vector<double> lgam(nmax + 1);
    for (int n = 0; n <= nmax; ++n)
        lgam[n] = std::lgamma(n + 1.0);
    std::vector<double> radial(2 * nmax + 1, 0.0); // indexed by s = m + n, un-normalized
    for (int q = 0; q < nr; ++q) {
        const double r = rule.nodes[q];
        const double w = rule.weights[q] * r * std::exp(-r * r);
        double rs = 1.0;
        for (int s = 0; s <= 2 * nmax; ++s) {
            radial[s] += w * rs;
            rs *= r;
        }
    }

    identity_resolution_result out;
    out.nmax = nmax;
    out.radius = R;
    out.ntheta = ntheta;
    out.nr = nr;
    out.matrix.resize(static_cast<std::size_t>(nmax + 1) * (nmax + 1));
    for (int m = 0; m <= nmax; ++m) {
        for (int n = 0; n <= nmax; ++n) {
            const double norm = std::exp(-0.5 * (lgam[m] + lgam[n]));
            const std::complex<double> v =
                angular[m - n + nmax] * (radial[m + n] * norm / std::numbers::pi);
            out.matrix[static_cast<std::size_t>(m) * (nmax + 1) + n] = v.real();
            if (m != n)
                out.max_offdiag = std::max(out.max_offdiag, std::abs(v));
        }
    }
    return out;
}

} // namespace fosc
