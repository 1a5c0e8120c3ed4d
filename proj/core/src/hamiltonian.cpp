#include "fosc/hamiltonian.hpp"

#include <cassert>
#include <charconv>
#include <cmath>

namespace fosc {

double level_energy(int n) {
    assert(n >= 0);
    return n + 0.5;
}

hamiltonian_function identity_hamiltonian() {
    return {"identity", [](double x) { return x; }, [](double) { return 1.0; }};
}

hamiltonian_function kerr_hamiltonian(double chi) {
    // In terms of H0 (with N = H0 - 1/2): chi (N^2 - N) = chi (x-1/2)(x-3/2),
    // so f(E_n) = chi n(n-1) exactly.
    std::string name = "kerr(chi=" + [chi] {
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof(buf), chi);
        return std::string(buf, res.ptr);
    }() + ")";
    return {std::move(name),
            [chi](double x) { return chi * (x - 0.5) * (x - 1.5); },
            [chi](double x) { return chi * (2.0 * x - 2.0); }};
}

hamiltonian_function einstein_rosen_hamiltonian() {
    return {"einstein_rosen",
            [](double x) { return 2.0 * (1.0 - std::exp(-x / 2.0)); },
            [](double x) { return std::exp(-x / 2.0); }};
}

hamiltonian_function builtin_hamiltonian(const std::string& name) {
    if (name == "id" || name == "identity")
        return identity_hamiltonian();
    if (name == "er" || name == "einstein_rosen")
        return einstein_rosen_hamiltonian();
    if (name == "kerr")
        return kerr_hamiltonian(1.0);
    if (name.rfind("kerr:", 0) == 0) {
        const std::string_view rest = std::string_view(name).substr(5);
        if (rest.rfind("chi=", 0) != 0)
            throw config_error("bad kerr selector '" + name + "', expected kerr:chi=<real>");
        const std::string_view num = rest.substr(4);
        double chi = 0.0;
        auto res = std::from_chars(num.data(), num.data() + num.size(), chi);
        if (res.ec != std::errc{} || res.ptr != num.data() + num.size())
            throw config_error("bad kerr coupling '" + std::string(num) + "'");
        return kerr_hamiltonian(chi);
    }
    throw config_error("unknown builtin Hamiltonian '" + name +
                       "' (known: id, er, kerr:chi=<real>)");
}

hamiltonian_function as_hamiltonian(expr_ptr ast, std::string name) {
    expr_ptr deriv = differentiate(ast);
    return {std::move(name),
            [ast](double x) { return evaluate(*ast, x); },
            [deriv](double x) { return evaluate(*deriv, x); }};
}

hamiltonian_function resolve_f_spec(const std::string& spec) {
    if (spec == "id" || spec == "identity" || spec == "er" || spec == "einstein_rosen" ||
        spec == "kerr" || spec.rfind("kerr:", 0) == 0)
        return builtin_hamiltonian(spec);
    return as_hamiltonian(parse_expression(spec), spec);
}

} // namespace fosc
