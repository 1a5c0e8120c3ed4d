#pragma once

#include <complex>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "fosc/classical.hpp"
#include "fosc/evolution.hpp"
#include "fosc/nogo.hpp"

namespace fosc {

/// Full double precision, printf "%.17g".
std::string format_full(double v);

/// Parses "a+bi" / "a-bi" / "bi" / "a" (plain reals accepted as pure-real).
std::complex<double> parse_complex(std::string_view text);

/// Writes via a temp file in the same directory followed by a rename.
void write_text_atomic(const std::filesystem::path& path, std::string_view content);

// CSV serializers; every file starts with its header row, values at full
// double precision.
std::string trajectory_csv(const classical_trajectory& traj);                   // t,x,p
std::string dephasing_csv(const dephasing_series& series);                      // t,defect,...
std::string wavefunction_csv(std::span<const double> xs,
                             std::span<const std::complex<double>> psi);        // x,re_psi,...
std::string residuals_csv(std::span<const residual_sample> samples);            // n,m,k,r,residual

} // namespace fosc
