#pragma once

#include <vector>

namespace fosc {

struct quadrature_rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on the Legendre
/// recurrence; nodes accurate to machine precision).
quadrature_rule gauss_legendre(int n);

/// The same rule mapped to [a, b].
quadrature_rule gauss_legendre(int n, double a, double b);

} // namespace fosc
