#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fosc/expr.hpp"

using namespace fosc;

namespace {

double eval_str(const std::string& s, double x) { return evaluate(parse_expression(s), x); }

double deriv_str(const std::string& s, double x) {
    return evaluate(differentiate(parse_expression(s)), x);
}

} // namespace

TEST_CASE("parsing and evaluation basics") {
    CHECK(eval_str("2*(1-exp(-x/2))", 0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(eval_str("x", 3.5) == 3.5);
    CHECK(eval_str("2+3*4", 0.0) == 14.0);
    CHECK(eval_str("2*3^2", 0.0) == 18.0);
    CHECK(eval_str("2^3^2", 0.0) == 512.0); // right-associative
    CHECK(eval_str("4/2/2", 0.0) == 1.0);   // left-associative
    CHECK(eval_str("(2)^-1", 0.0) == 0.5);
    CHECK(eval_str(" ( x + 1 ) * 2 ", 2.0) == 6.0);
    CHECK(eval_str("1e-3", 0.0) == 1e-3);
    CHECK(eval_str("2.5E+2", 0.0) == 250.0);
    CHECK(eval_str(".5", 0.0) == 0.5);
    CHECK(eval_str("sqrt(x)", 9.0) == 3.0);
    CHECK(eval_str("sin(x)^2+cos(x)^2", 0.8) == doctest::Approx(1.0).epsilon(1e-15));
    // '-' binds to the atom, so -x^2 reads (-x)^2
    CHECK(eval_str("-x^2", 3.0) == 9.0);
    CHECK(eval_str("0-x^2", 3.0) == -9.0);
}

TEST_CASE("syntax errors carry byte offsets") {
    CHECK_THROWS_AS(parse_expression(""), parse_error);

    try {
        parse_expression("exp(");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 4);
        CHECK(std::string(e.what()).find("expected expression") != std::string::npos);
    }

    try {
        parse_expression("foo(x)");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 0);
        CHECK(std::string(e.what()).find("unknown identifier 'foo'") != std::string::npos);
    }

    try {
        parse_expression("1e"); // lexes as number 1 followed by identifier e
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 1);
    }

    try {
        parse_expression("2 2");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 2);
    }

    CHECK_THROWS_AS(parse_expression("2*"), parse_error);
    CHECK_THROWS_AS(parse_expression("(x"), parse_error);
    CHECK_THROWS_AS(parse_expression("x)"), parse_error);
    CHECK_THROWS_AS(parse_expression("sin x"), parse_error);
    CHECK_THROWS_AS(parse_expression("2*$"), parse_error);
}

TEST_CASE("hostile inputs are refused, not crashed on") {
    const std::string deep(50000, '(');
    CHECK_THROWS_AS(parse_expression(deep), parse_error);
    std::string negs;
    for (int i = 0; i < 30000; ++i)
        negs += '-';
    negs += 'x';
    CHECK_THROWS_AS(parse_expression(negs), parse_error);
    const std::string huge(100000, '1');
    CHECK_THROWS_AS(parse_expression(huge), parse_error);
}

TEST_CASE("literal-only subtrees fold to constants") {
    expr_ptr e = parse_expression("2*3+1");
    CHECK(e->kind == expr_kind::constant);
    CHECK(e->value == 7.0);

    expr_ptr kept = parse_expression("2*x");
    CHECK(kept->kind == expr_kind::mul);

    // a folded negation is just a negative constant
    expr_ptr neg = parse_expression("-2.5");
    CHECK(neg->kind == expr_kind::constant);
    CHECK(neg->value == -2.5);
}

TEST_CASE("domain violations surface at call time") {
    expr_ptr lnb = parse_expression("ln(x)");
    try {
        evaluate(lnb, -1.0);
        FAIL("expected eval_error");
    } catch (const eval_error& e) {
        CHECK(e.input() == -1.0);
    }
    CHECK_THROWS_AS(eval_str("sqrt(x)", -4.0), eval_error);
    CHECK_THROWS_AS(eval_str("1/x", 0.0), eval_error);
    CHECK_THROWS_AS(eval_str("x^0.5", -2.0), eval_error);
    CHECK_THROWS_AS(eval_str("x^-1", 0.0), eval_error);
    // the offending constant subtree stays unfolded and throws when reached
    CHECK_THROWS_AS(eval_str("ln(0-1)", 0.0), eval_error);
}

TEST_CASE("symbolic derivatives match hand results") {
    // matches f' of the exponential builtin
    CHECK(deriv_str("2*(1-exp(-x/2))", 1.0) ==
          doctest::Approx(0.6065306597126334).epsilon(1e-14));
    CHECK(parse_expression("x")->kind == expr_kind::variable);
    CHECK(differentiate(parse_expression("x"))->kind == expr_kind::constant);
    CHECK(deriv_str("x", 17.0) == 1.0);
    CHECK(deriv_str("x^2", 3.0) == 6.0);
    CHECK(deriv_str("x^3", 2.0) == 12.0);
    CHECK(deriv_str("x^0", 5.0) == 0.0);
    CHECK(deriv_str("1/x", 2.0) == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(deriv_str("sin(cos(x))", 0.4) ==
          doctest::Approx(std::cos(std::cos(0.4)) * -std::sin(0.4)).epsilon(1e-14));
    CHECK(deriv_str("sqrt(x)", 4.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(deriv_str("x/(1+x)", 1.0) == doctest::Approx(0.25).epsilon(1e-14));
    // non-constant exponent goes through exp(v ln u)
    CHECK(deriv_str("x^x", 2.0) == doctest::Approx(4.0 * (std::log(2.0) + 1.0)).epsilon(1e-13));
    CHECK(deriv_str("exp(x)^2", 1.0) == doctest::Approx(2.0 * std::exp(2.0)).epsilon(1e-13));
}

namespace {

expr_ptr random_tree(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 12);
    std::uniform_real_distribution<double> cval(0.2, 2.5);
    switch (pick(rng)) {
    case 0:
        return make_constant(cval(rng));
    case 1:
        return make_variable();
    case 2:
        return make_unary(expr_kind::negate, random_tree(rng, depth - 1));
    case 3:
        return make_unary(expr_kind::exp, random_tree(rng, depth - 1));
    case 4:
        return make_unary(expr_kind::ln, random_tree(rng, depth - 1));
    case 5:
        return make_unary(expr_kind::sin, random_tree(rng, depth - 1));
    case 6:
        return make_unary(expr_kind::cos, random_tree(rng, depth - 1));
    case 7:
        return make_unary(expr_kind::sqrt, random_tree(rng, depth - 1));
    case 8:
        return make_binary(expr_kind::add, random_tree(rng, depth - 1),
                           random_tree(rng, depth - 1));
    case 9:
        return make_binary(expr_kind::sub, random_tree(rng, depth - 1),
                           random_tree(rng, depth - 1));
    case 10:
        return make_binary(expr_kind::mul, random_tree(rng, depth - 1),
                           random_tree(rng, depth - 1));
    case 11:
        return make_binary(expr_kind::div, random_tree(rng, depth - 1),
                           random_tree(rng, depth - 1));
    default: {
        std::uniform_int_distribution<int> ip(-3, 3);
        return make_binary(expr_kind::pow, random_tree(rng, depth - 1),
                           make_constant(static_cast<double>(ip(rng))));
    }
    }
}

} // namespace

TEST_CASE("print/parse round trip on random trees") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 400; ++i) {
        expr_ptr a = random_tree(rng, 4);
        const std::string s = to_string(a);
        expr_ptr b = parse_expression(s);
        CAPTURE(s);
        REQUIRE(structurally_equal(a, b));
        // printing is a fixed point
        CHECK(to_string(b) == s);
    }
}

TEST_CASE("round trip on hand-written strings") {
    for (const char* s : {"2*(1-exp(-x/2))", "x^2-x^-2", "-(x+1)*3", "sin(x)/cos(x)",
                          "sqrt(x^2+1)", "x^x", "1-2-3*x", "x/(2*x)/x", "--x", "2^-x"}) {
        expr_ptr a = parse_expression(s);
        expr_ptr b = parse_expression(to_string(a));
        CAPTURE(s);
        CHECK(structurally_equal(a, b));
    }
}

TEST_CASE("derivatives agree with central differences on random trees") {
    std::mt19937 rng(987654);
    std::uniform_real_distribution<double> xd(0.15, 3.0);
    const double h = 1e-4;
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        expr_ptr f = random_tree(rng, 3);
        expr_ptr df = differentiate(f);
        for (int j = 0; j < 10; ++j) {
            const double x = xd(rng);
            double d, fd1, fd2;
            try {
                d = evaluate(df, x);
                fd1 = (evaluate(f, x + h) - evaluate(f, x - h)) / (2.0 * h);
                fd2 = (evaluate(f, x + 2 * h) - evaluate(f, x - 2 * h)) / (4.0 * h);
            } catch (const eval_error&) {
                continue; // off-domain sample
            }
            if (!std::isfinite(d) || !std::isfinite(fd1) || !std::isfinite(fd2))
                continue;
            const double scale = 1.0 + std::abs(d);
            if (std::abs(fd1 - fd2) > 1e-7 * scale)
                continue; // ill-conditioned point (large higher derivatives)
            CAPTURE(to_string(f));
            CAPTURE(x);
            REQUIRE(std::abs(d - fd1) <= 1e-6 * scale);
            ++checked;
        }
    }
    CHECK(checked > 500); // the filter must not hollow the property out
}
