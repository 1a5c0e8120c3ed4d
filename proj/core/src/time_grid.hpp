#pragma once

#include <vector>

#include "fosc/errors.hpp"

namespace fosc::detail {

/// 0, dt, 2dt, ... plus the endpoint t_max when it falls off the grid.
inline std::vector<double> uniform_time_grid(double t_max, double dt) {
    if (!(dt > 0.0))
        throw config_error("dt must be positive");
    if (!(t_max >= 0.0))
        throw config_error("t_max must be non-negative");
    if (t_max / dt > 2e7)
        throw config_error("time grid too large (t_max/dt > 2e7)");
    std::vector<double> ts;
    ts.push_back(0.0);
    const double eps = dt * 1e-9;
    for (std::size_t i = 1; static_cast<double>(i) * dt <= t_max + eps; ++i)
        ts.push_back(static_cast<double>(i) * dt);
    if (t_max - ts.back() > eps)
        ts.push_back(t_max);
    return ts;
}

} // namespace fosc::detail
