#include "fosc/evolution.hpp"

#include <cmath>

#include "time_grid.hpp"

namespace fosc {

evolution_plan::evolution_plan(hamiltonian_function f_, int nmax) : f(std::move(f_)) {
    if (nmax < 0)
        throw config_error("nmax must be >= 0");
    level_values.resize(nmax + 1);
    for (int n = 0; n <= nmax; ++n)
        level_values[n] = f.value(level_energy(n));
}

fock_state evolve(const fock_state& state, const evolution_plan& plan, double t) {
    const int top = state.nmax();
    if (static_cast<int>(plan.level_values.size()) <= top)
        throw config_error("evolution plan covers fewer levels than the state");
    fock_state out = state;
    for (int n = 0; n <= top; ++n) {
        const double phase = -t * plan.level_values[n];
        out.amplitudes[n] *= std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return out;
}

fock_state evolve(const fock_state& state, const hamiltonian_function& f, double t) {
    return evolve(state, evolution_plan(f, state.nmax()), t);
}

double classical_label_energy(coherent_label label, energy_convention conv) {
    const double mean_n = label.mean_occupation();
    return conv == energy_convention::classical ? mean_n : mean_n + 0.5;
}

std::complex<double> evolve_label(coherent_label label, const hamiltonian_function& f,
                                  double t, energy_convention conv) {
    const double w = f.derivative(classical_label_energy(label, conv));
    const double phase = -t * w;
    return label.alpha * std::complex<double>(std::cos(phase), std::sin(phase));
}

namespace {

std::complex<double> overlap(const fock_state& bra, const fock_state& ket) {
    std::complex<double> s = 0.0;
    const std::size_t n = std::min(bra.amplitudes.size(), ket.amplitudes.size());
    for (std::size_t i = 0; i < n; ++i)
        s += std::conj(bra.amplitudes[i]) * ket.amplitudes[i];
    return s;
}

} // namespace

double coherence_defect(coherent_label alpha0, const hamiltonian_function& f, double t,
                        energy_convention conv) {
    const int nmax = truncation_level(std::abs(alpha0.alpha));
    const evolution_plan plan(f, nmax);
    const fock_state evolved = evolve(coherent_state(alpha0, nmax), plan, t);
    const fock_state target = coherent_state({evolve_label(alpha0, f, t, conv)}, nmax);
    return std::max(0.0, 1.0 - std::abs(overlap(target, evolved)));
}

double autocorrelation(const fock_state& state0, const hamiltonian_function& f, double t) {
    const evolution_plan plan(f, state0.nmax());
    std::complex<double> s = 0.0;
    for (int n = 0; n <= state0.nmax(); ++n) {
        const double phase = -t * plan.level_values[n];
        s += std::norm(state0.amplitudes[n]) *
             std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return std::abs(s);
}

double ehrenfest_gap(coherent_label alpha0, const hamiltonian_function& f, double t,
                     energy_convention conv) {
    const int nmax = truncation_level(std::abs(alpha0.alpha));
    const fock_state evolved = evolve(coherent_state(alpha0, nmax), evolution_plan(f, nmax), t);
    const observable_report obs = expectations(evolved);
    const std::complex<double> z_cl = std::sqrt(2.0) * evolve_label(alpha0, f, t, conv);
    return std::hypot(obs.mean_x - z_cl.real(), obs.mean_p - z_cl.imag());
}

dephasing_series dephasing_scan(coherent_label alpha0, const hamiltonian_function& f,
                                double t_max, double dt, energy_convention conv) {
    return dephasing_scan(alpha0, f, t_max, dt, conv,
                          truncation_level(std::abs(alpha0.alpha)),
                          truncation_policy::enforce);
}

dephasing_series dephasing_scan(coherent_label alpha0, const hamiltonian_function& f,
                                double t_max, double dt, energy_convention conv, int nmax,
                                truncation_policy policy) {
    const std::vector<double> ts = detail::uniform_time_grid(t_max, dt);

    const evolution_plan plan(f, nmax);
    const fock_state initial = coherent_state(alpha0, nmax, policy);

    dephasing_series series;
    series.times = ts;
    series.defect.reserve(ts.size());
    series.autocorrelation.reserve(ts.size());
    series.ehrenfest_gap.reserve(ts.size());
    series.observables.reserve(ts.size());
    for (double t : ts) {
        const fock_state evolved = evolve(initial, plan, t);
        const fock_state target = coherent_state({evolve_label(alpha0, f, t, conv)}, nmax, policy);
        series.defect.push_back(std::max(0.0, 1.0 - std::abs(overlap(target, evolved))));
        series.autocorrelation.push_back(std::abs(overlap(initial, evolved)));
        const observable_report obs = expectations(evolved);
        const std::complex<double> z_cl = std::sqrt(2.0) * evolve_label(alpha0, f, t, conv);
        series.ehrenfest_gap.push_back(
            std::hypot(obs.mean_x - z_cl.real(), obs.mean_p - z_cl.imag()));
        series.observables.push_back(obs);
    }
    return series;
}

std::vector<double> find_revivals(const dephasing_series& series, double threshold) {
    if (!(threshold > 0.0))
        throw config_error("threshold must be positive");
    std::vector<double> times;
    const auto& a = series.autocorrelation;
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (a[i] >= threshold && a[i] >= a[i - 1] && a[i] >= a[i + 1])
            times.push_back(series.times[i]);
    }
    return times;
}

} // namespace fosc
