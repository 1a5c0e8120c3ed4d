#pragma once

#include <functional>
#include <string>
#include <utility>

#include "fosc/errors.hpp"
#include "fosc/expr.hpp"

namespace fosc {

/// Oscillator level energy E_n = n + 1/2 (units hbar = m = k = 1).
double level_energy(int n);

/// A differentiable scalar function f defining the Hamiltonian H = f(H0),
/// with exact derivative access. Immutable and safe to share across threads.
class hamiltonian_function {
public:
    using fn = std::function<double(double)>;

    hamiltonian_function(std::string name, fn eval, fn deriv, double domain_min = 0.0)
        : name_(std::move(name)),
          eval_(std::move(eval)),
          deriv_(std::move(deriv)),
          domain_min_(domain_min) {}

    const std::string& name() const { return name_; }
    double value(double x) const { return eval_(x); }
    double derivative(double x) const { return deriv_(x); }
    double domain_min() const { return domain_min_; }

private:
    std::string name_;
    fn eval_;
    fn deriv_;
    double domain_min_;
};

// Built-in instances.
hamiltonian_function identity_hamiltonian();        // f(x) = x
hamiltonian_function kerr_hamiltonian(double chi);  // f(x) = chi (x-1/2)(x-3/2), f(E_n) = chi n(n-1)
hamiltonian_function einstein_rosen_hamiltonian();  // f(x) = 2(1 - e^{-x/2})

/// Built-in selector: "id"/"identity", "er"/"einstein_rosen",
/// "kerr:chi=<real>" (plain "kerr" means chi = 1).
/// Throws config_error for anything else.
hamiltonian_function builtin_hamiltonian(const std::string& name);

/// Wraps a parsed expression: eval = ast, deriv = differentiate(ast).
hamiltonian_function as_hamiltonian(expr_ptr ast, std::string name);

/// Resolves a user-supplied --f value: builtin selector first, otherwise
/// parsed as an expression in x.
hamiltonian_function resolve_f_spec(const std::string& spec);

} // namespace fosc
