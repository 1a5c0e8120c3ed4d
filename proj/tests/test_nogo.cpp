#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "fosc/nogo.hpp"

using namespace fosc;

TEST_CASE("branch ratios for the identity are exact integers") {
    const auto id = identity_hamiltonian();
    for (int n = 0; n <= 10; ++n)
        for (int m = 0; m <= 10; ++m)
            for (double r : {0.3, 1.0, 2.7})
                CHECK(branch_ratio(id, n, m, r) == static_cast<double>(n - m));
}

TEST_CASE("branch ratio pins for the exponential spectrum") {
    const auto er = einstein_rosen_hamiltonian();
    CHECK(branch_ratio(er, 1, 0, 0.0) == doctest::Approx(0.6128684606607803).epsilon(1e-13));
    CHECK(branch_ratio(er, 0, 1, 0.0) == doctest::Approx(-0.6128684606607803).epsilon(1e-13));
    CHECK(branch_ratio(er, 0, 1, 0.5) == doctest::Approx(-0.6523950804189188).epsilon(1e-13));
    CHECK(branch_ratio(er, 4, 4, 1.7) == 0.0);
}

TEST_CASE("branch ratio is antisymmetric and scale invariant") {
    const auto er = einstein_rosen_hamiltonian();
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m)
            CHECK(branch_ratio(er, n, m, 1.3) == -branch_ratio(er, m, n, 1.3));

    // g = c f leaves the ratio unchanged
    const double c = 3.7;
    const hamiltonian_function scaled(
        "scaled_er", [c](double x) { return c * 2.0 * (1.0 - std::exp(-x / 2.0)); },
        [c](double x) { return c * std::exp(-x / 2.0); });
    for (int m = 1; m <= 6; ++m)
        for (double r : {0.0, 0.9, 2.2})
            CHECK(branch_ratio(scaled, 0, m, r) ==
                  doctest::Approx(branch_ratio(er, 0, m, r)).epsilon(1e-14));
}

TEST_CASE("singular frequency is rejected") {
    const auto flat = resolve_f_spec("3"); // f' == 0 everywhere
    CHECK_THROWS_AS(branch_ratio(flat, 0, 1, 0.5), numeric_error);
    const auto square = resolve_f_spec("x^2"); // f'(0) = 0 exactly
    CHECK_THROWS_AS(branch_ratio(square, 0, 1, 0.0), numeric_error);
    CHECK_THROWS_AS(branch_ratio(square, -1, 1, 0.5), config_error);

    // rejected, not skipped, and the error names the offending radius
    const double radii[] = {0.5, 0.0};
    try {
        family_existence_check(square, 3, radii, 1e-9);
        FAIL("expected numeric_error");
    } catch (const numeric_error& e) {
        CHECK(std::string(e.what()).find("r = 0.0") != std::string::npos);
    }
}

TEST_CASE("family existence verdicts") {
    const double radii[] = {0.5, 1.0, 2.0};

    const auto pass = family_existence_check(identity_hamiltonian(), 10, radii, 1e-9);
    CHECK(pass.pass);
    CHECK(!pass.witness.has_value());

    const auto er = family_existence_check(einstein_rosen_hamiltonian(), 10, radii, 1e-9);
    REQUIRE(!er.pass);
    REQUIRE(er.witness.has_value());
    CHECK(er.witness->n == 0);
    CHECK(er.witness->m == 1);
    CHECK(er.witness->r == 0.5);
    CHECK(er.witness->ratio == doctest::Approx(-0.6523950804189188).epsilon(1e-12));

    // the (0,1) kerr pair is an exact integer (both levels sit at zero), so the
    // first witness is (0,2)
    const auto kerr = family_existence_check(kerr_hamiltonian(1.0), 10, radii, 1e-9);
    REQUIRE(!kerr.pass);
    REQUIRE(kerr.witness.has_value());
    CHECK(kerr.witness->n == 0);
    CHECK(kerr.witness->m == 2);
    CHECK(kerr.witness->r == 0.5);
    CHECK(kerr.witness->ratio == doctest::Approx(8.0 / 7.0).epsilon(1e-13));
}

TEST_CASE("family existence validates its inputs") {
    const double radii[] = {0.5};
    CHECK_THROWS_AS(family_existence_check(identity_hamiltonian(), 0, radii, 1e-9),
                    config_error);
    CHECK_THROWS_AS(
        family_existence_check(identity_hamiltonian(), 3, std::span<const double>{}, 1e-9),
        config_error);
}

TEST_CASE("winding residual pins") {
    const auto s = er_residual(0, 1, 1, 0.0);
    CHECK(s.residual == doctest::Approx(2.4324191999220012).epsilon(1e-13));
    CHECK(s.n == 0);
    CHECK(s.m == 1);
    CHECK(s.k == 1);

    CHECK(er_residual(0, 1, 2, 0.0).residual ==
          doctest::Approx(1.4183469073355842).epsilon(1e-13));
    CHECK(er_residual(20, 21, 1, 0.0).residual ==
          doctest::Approx(1.74824510801e-4).epsilon(1e-9));
    CHECK(er_residual(3, 3, 1, 0.0).residual == 0.0); // boundary; scans exclude n = m
}

TEST_CASE("residuals stay within [0, pi]") {
    for (int n = 0; n <= 8; ++n)
        for (int m = 0; m <= 8; ++m)
            for (int k = 1; k <= 6; ++k)
                for (double r : {0.0, 0.8, 1.9}) {
                    const double res = er_residual(n, m, k, r).residual;
                    CHECK(res >= 0.0);
                    CHECK(res <= std::numbers::pi);
                }
}

TEST_CASE("closed-form and branch-ratio residual routes agree") {
    const auto er = einstein_rosen_hamiltonian();
    for (int n = 0; n <= 6; ++n)
        for (int m = n + 1; m <= 6; ++m)
            for (int k = 1; k <= 4; ++k)
                for (double r : {0.0, 0.5, 1.0, 1.7}) {
                    const double direct = er_residual(n, m, k, r).residual;
                    const double generic = winding_residual(er, n, m, k, r);
                    CHECK(std::abs(direct - generic) < 1e-12);
                }
}

TEST_CASE("adjacent-level residual decays with the level") {
    double prev = er_residual(0, 1, 1, 0.0).residual;
    for (int n = 1; n <= 15; ++n) {
        const double cur = er_residual(n, n + 1, 1, 0.0).residual;
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("exhaustive residual scan") {
    const double radii[] = {0.0, 1.0};
    const auto report = er_impossibility_scan(5, 3, radii);
    CHECK(report.min_residual > 0.0);
    CHECK(report.min_residual == doctest::Approx(0.096811492488).epsilon(1e-9));
    CHECK(report.argmin.n == 0);
    CHECK(report.argmin.m == 2);
    CHECK(report.argmin.k == 1);
    CHECK(report.argmin.r == 0.0);
    CHECK(report.samples.size() == 2u * 15u * 3u);
    CHECK(report.floor_satisfied); // default floor 1e-3

    // the default grid still clears the default floor
    const auto wide = er_impossibility_scan(12, 8, radii);
    CHECK(wide.min_residual == doctest::Approx(0.00705096331794).epsilon(1e-7));
    CHECK(wide.floor_satisfied);

    CHECK_THROWS_AS(er_impossibility_scan(0, 3, radii), config_error);
    CHECK_THROWS_AS(er_impossibility_scan(5, 0, radii), config_error);
    CHECK_THROWS_AS(er_impossibility_scan(9000, 9000, radii), config_error); // grid cap
}

TEST_CASE("identity-analogue sanity: integer windings leave no residual") {
    const double radii[] = {0.5, 1.0, 2.0};
    const auto report = winding_residual_scan(identity_hamiltonian(), 8, 5, radii);
    double worst = 0.0;
    for (const auto& s : report.samples)
        worst = std::max(worst, s.residual);
    CHECK(worst <= 1e-10);
    CHECK(!report.floor_satisfied); // residuals sit at zero, below any floor
}
