#include "fosc/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <system_error>

namespace fosc {

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::complex<double> parse_complex(std::string_view text) {
    const std::string s(text);
    if (s.empty())
        throw config_error("empty complex literal");

    const char* p = s.c_str();
    char* end = nullptr;

    auto read_number = [&](double& out) -> bool {
        if (*p == 'i') { // bare 'i' / '+i' / '-i'
            out = 1.0;
            return true;
        }
        if ((*p == '+' || *p == '-') && *(p + 1) == 'i') {
            out = (*p == '-') ? -1.0 : 1.0;
            ++p;
            return true;
        }
        out = std::strtod(p, &end);
        if (end == p)
            return false;
        p = end;
        return true;
    };

    double first = 0.0;
    if (!read_number(first))
        throw config_error("bad complex literal '" + s + "'");
    if (*p == 'i') {
        ++p;
        if (*p != '\0')
            throw config_error("bad complex literal '" + s + "'");
        return {0.0, first};
    }
    if (*p == '\0')
        return {first, 0.0};
    if (*p != '+' && *p != '-')
        throw config_error("bad complex literal '" + s + "'");

    double second = 0.0;
    if (!read_number(second))
        throw config_error("bad complex literal '" + s + "'");
    if (*p != 'i' || *(p + 1) != '\0')
        throw config_error("bad complex literal '" + s + "' (expected a+bi)");
    return {first, second};
}

void write_text_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    const fs::path tmp = dir / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw config_error("cannot write to '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw config_error("short write to '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw config_error("cannot rename '" + tmp.string() + "' to '" + path.string() +
                           "': " + ec.message());
    }
}

std::string trajectory_csv(const classical_trajectory& traj) {
    std::string out = "t,x,p\n";
    for (const auto& s : traj.samples) {
        out += format_full(s.t);
        out += ',';
        out += format_full(s.z.real());
        out += ',';
        out += format_full(s.z.imag());
        out += '\n';
    }
    return out;
}

std::string dephasing_csv(const dephasing_series& series) {
    std::string out = "t,defect,autocorr,ehrenfest_gap,mean_x,mean_p,var_x,var_p\n";
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        const observable_report& obs = series.observables[i];
        out += format_full(series.times[i]);
        out += ',';
        out += format_full(series.defect[i]);
        out += ',';
        out += format_full(series.autocorrelation[i]);
        out += ',';
        out += format_full(series.ehrenfest_gap[i]);
        out += ',';
        out += format_full(obs.mean_x);
        out += ',';
        out += format_full(obs.mean_p);
        out += ',';
        out += format_full(obs.var_x);
        out += ',';
        out += format_full(obs.var_p);
        out += '\n';
    }
    return out;
}

std::string wavefunction_csv(std::span<const double> xs,
                             std::span<const std::complex<double>> psi) {
    std::string out = "x,re_psi,im_psi,abs2_psi\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += format_full(xs[i]);
        out += ',';
        out += format_full(psi[i].real());
        out += ',';
        out += format_full(psi[i].imag());
        out += ',';
        out += format_full(std::norm(psi[i]));
        out += '\n';
    }
    return out;
}

std::string residuals_csv(std::span<const residual_sample> samples) {
    std::string out = "n,m,k,r,residual\n";
    for (const auto& s : samples) {
        out += std::to_string(s.n);
        out += ',';
        out += std::to_string(s.m);
        out += ',';
        out += std::to_string(s.k);
        out += ',';
        out += format_full(s.r);
        out += ',';
        out += format_full(s.residual);
        out += '\n';
    }
    return out;
}

} // namespace fosc
