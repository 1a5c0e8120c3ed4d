#include "fosc/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "fosc/errors.hpp"

namespace fosc {

quadrature_rule gauss_legendre(int n) {
    if (n < 1)
        throw config_error("quadrature order must be >= 1");
    if (n > 100000)
        throw config_error("quadrature order too large");
    quadrature_rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-like initial guess for the i-th root of P_n
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // evaluate P_n and P_{n-1} by the three-term recurrence
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0; // enforce exact symmetry for the central node
    }
    return rule;
}

quadrature_rule gauss_legendre(int n, double a, double b) {
    quadrature_rule rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double halfw = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = mid + halfw * rule.nodes[i];
        rule.weights[i] *= halfw;
    }
    return rule;
}

} // namespace fosc
