#include "fosc/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

namespace fosc {

bool is_unary(expr_kind k) {
    switch (k) {
    case expr_kind::negate:
    case expr_kind::exp:
    case expr_kind::ln:
    case expr_kind::sin:
    case expr_kind::cos:
    case expr_kind::sqrt:
        return true;
    default:
        return false;
    }
}

bool is_binary(expr_kind k) {
    switch (k) {
    case expr_kind::add:
    case expr_kind::sub:
    case expr_kind::mul:
    case expr_kind::div:
    case expr_kind::pow:
        return true;
    default:
        return false;
    }
}

namespace {

double pow_integer(double base, long long n) {
    if (n < 0) {
        if (base == 0.0)
            throw eval_error("zero raised to a negative power", base);
        return 1.0 / pow_integer(base, -n);
    }
    double acc = 1.0;
    double b = base;
    while (n > 0) {
        if (n & 1)
            acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

double apply_pow(double a, double b) {
    // Integer exponents by repeated multiplication; otherwise exp(b ln a),
    // which requires a > 0.
    if (std::isfinite(b) && b == std::nearbyint(b) && std::abs(b) <= 1e15)
        return pow_integer(a, static_cast<long long>(b));
    if (a <= 0.0)
        throw eval_error("non-integer power of a non-positive base", a);
    return std::exp(b * std::log(a));
}

bool all_constant(const expr_ptr& e) { return e && e->kind == expr_kind::constant; }

expr_ptr node(expr_kind k, double v, expr_ptr lhs, expr_ptr rhs) {
    return std::make_shared<expr_node>(expr_node{k, v, std::move(lhs), std::move(rhs)});
}

} // namespace

expr_ptr make_constant(double v) { return node(expr_kind::constant, v, nullptr, nullptr); }

expr_ptr make_variable() { return node(expr_kind::variable, 0.0, nullptr, nullptr); }

expr_ptr make_unary(expr_kind k, expr_ptr operand) {
    expr_ptr n = node(k, 0.0, std::move(operand), nullptr);
    if (all_constant(n->lhs)) {
        try {
            double v = evaluate(*n, 0.0);
            if (std::isfinite(v))
                return make_constant(v);
        } catch (const eval_error&) {
            // out of domain: keep the node, the error surfaces at call time
        }
    }
    return n;
}

expr_ptr make_binary(expr_kind k, expr_ptr lhs, expr_ptr rhs) {
    expr_ptr n = node(k, 0.0, std::move(lhs), std::move(rhs));
    if (all_constant(n->lhs) && all_constant(n->rhs)) {
        try {
            double v = evaluate(*n, 0.0);
            if (std::isfinite(v))
                return make_constant(v);
        } catch (const eval_error&) {
        }
    }
    return n;
}

double evaluate(const expr_node& e, double x) {
    switch (e.kind) {
    case expr_kind::constant:
        return e.value;
    case expr_kind::variable:
        return x;
    case expr_kind::negate:
        return -evaluate(*e.lhs, x);
    case expr_kind::add:
        return evaluate(*e.lhs, x) + evaluate(*e.rhs, x);
    case expr_kind::sub:
        return evaluate(*e.lhs, x) - evaluate(*e.rhs, x);
    case expr_kind::mul:
        return evaluate(*e.lhs, x) * evaluate(*e.rhs, x);
    case expr_kind::div: {
        double num = evaluate(*e.lhs, x);
        double den = evaluate(*e.rhs, x);
        if (den == 0.0)
            throw eval_error("division by zero", x);
        return num / den;
    }
    case expr_kind::pow:
        return apply_pow(evaluate(*e.lhs, x), evaluate(*e.rhs, x));
    case expr_kind::exp:
        return std::exp(evaluate(*e.lhs, x));
    case expr_kind::ln: {
        double a = evaluate(*e.lhs, x);
        if (a <= 0.0)
            throw eval_error("ln of a non-positive value", a);
        return std::log(a);
    }
    case expr_kind::sin:
        return std::sin(evaluate(*e.lhs, x));
    case expr_kind::cos:
        return std::cos(evaluate(*e.lhs, x));
    case expr_kind::sqrt: {
        double a = evaluate(*e.lhs, x);
        if (a < 0.0)
            throw eval_error("sqrt of a negative value", a);
        return std::sqrt(a);
    }
    }
    std::abort(); // unreachable
}

// ---------------------------------------------------------------------------
// Lexer / recursive-descent parser
// ---------------------------------------------------------------------------

namespace {

enum class token_kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct token {
    token_kind kind;
    std::size_t offset;
    double number = 0.0;
    std::string text;
};

class lexer {
public:
    explicit lexer(std::string_view src) : src_(src) { advance(); }

    const token& peek() const { return current_; }

    token take() {
        token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        current_.offset = pos_;
        current_.text.clear();
        if (pos_ >= src_.size()) {
            current_.kind = token_kind::end;
            return;
        }
        char c = src_[pos_];
        switch (c) {
        case '+': current_.kind = token_kind::plus; ++pos_; return;
        case '-': current_.kind = token_kind::minus; ++pos_; return;
        case '*': current_.kind = token_kind::star; ++pos_; return;
        case '/': current_.kind = token_kind::slash; ++pos_; return;
        case '^': current_.kind = token_kind::caret; ++pos_; return;
        case '(': current_.kind = token_kind::lparen; ++pos_; return;
        case ')': current_.kind = token_kind::rparen; ++pos_; return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            current_.kind = token_kind::ident;
            current_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    void lex_number() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
        }
        if (pos_ - start == 1 && src_[start] == '.')
            throw parse_error("malformed number", start);
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-'))
                ++pos_;
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            } else {
                pos_ = mark; // the 'e' belongs to an identifier, not this number
            }
        }
        double v = 0.0;
        auto first = src_.data() + start;
        auto last = src_.data() + pos_;
        auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc{} || res.ptr != last)
            throw parse_error("malformed number", start);
        current_.kind = token_kind::number;
        current_.number = v;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    token current_;
};

class parser {
public:
    explicit parser(std::string_view src) : lex_(src) {}

    expr_ptr parse() {
        expr_ptr e = parse_expr();
        const token& t = lex_.peek();
        if (t.kind != token_kind::end)
            throw parse_error("expected operator or end of input", t.offset);
        return e;
    }

private:
    expr_ptr parse_expr() {
        expr_ptr e = parse_term();
        while (true) {
            token_kind k = lex_.peek().kind;
            if (k == token_kind::plus) {
                lex_.take();
                e = make_binary(expr_kind::add, e, parse_term());
            } else if (k == token_kind::minus) {
                lex_.take();
                e = make_binary(expr_kind::sub, e, parse_term());
            } else {
                return e;
            }
        }
    }

    expr_ptr parse_term() {
        expr_ptr e = parse_factor();
        while (true) {
            token_kind k = lex_.peek().kind;
            if (k == token_kind::star) {
                lex_.take();
                e = make_binary(expr_kind::mul, e, parse_factor());
            } else if (k == token_kind::slash) {
                lex_.take();
                e = make_binary(expr_kind::div, e, parse_factor());
            } else {
                return e;
            }
        }
    }

    // '^' is right-associative: factor := atom ('^' factor)?
    expr_ptr parse_factor() {
        expr_ptr base = parse_atom();
        if (lex_.peek().kind == token_kind::caret) {
            lex_.take();
            return make_binary(expr_kind::pow, base, parse_factor());
        }
        return base;
    }

    expr_ptr parse_atom() {
        const token& t = lex_.peek();
        if (++depth_ > max_depth)
            throw parse_error("expression nested too deeply", t.offset);
        struct depth_guard {
            int& d;
            ~depth_guard() { --d; }
        } guard{depth_};
        switch (t.kind) {
        case token_kind::number: {
            token num = lex_.take();
            return make_constant(num.number);
        }
        case token_kind::minus:
            lex_.take();
            return make_unary(expr_kind::negate, parse_atom());
        case token_kind::lparen: {
            lex_.take();
            expr_ptr e = parse_expr();
            expect_rparen();
            return e;
        }
        case token_kind::ident: {
            token id = lex_.take();
            if (id.text == "x")
                return make_variable();
            expr_kind fk;
            if (id.text == "exp")
                fk = expr_kind::exp;
            else if (id.text == "ln")
                fk = expr_kind::ln;
            else if (id.text == "sin")
                fk = expr_kind::sin;
            else if (id.text == "cos")
                fk = expr_kind::cos;
            else if (id.text == "sqrt")
                fk = expr_kind::sqrt;
            else
                throw parse_error("unknown identifier '" + id.text + "'", id.offset);
            const token& open = lex_.peek();
            if (open.kind != token_kind::lparen)
                throw parse_error("expected '(' after '" + id.text + "'", open.offset);
            lex_.take();
            expr_ptr arg = parse_expr();
            expect_rparen();
            return make_unary(fk, arg);
        }
        default:
            throw parse_error("expected expression", t.offset);
        }
    }

    void expect_rparen() {
        const token& t = lex_.peek();
        if (t.kind != token_kind::rparen)
            throw parse_error("expected ')'", t.offset);
        lex_.take();
    }

    static constexpr int max_depth = 2000;
    lexer lex_;
    int depth_ = 0;
};

} // namespace

expr_ptr parse_expression(std::string_view text) {
    if (text.empty())
        throw parse_error("empty expression", 0);
    if (text.size() > 65536)
        throw parse_error("expression too long", 0);
    return parser(text).parse();
}

// ---------------------------------------------------------------------------
// Symbolic differentiation
// ---------------------------------------------------------------------------

expr_ptr differentiate(const expr_ptr& e) {
    switch (e->kind) {
    case expr_kind::constant:
        return make_constant(0.0);
    case expr_kind::variable:
        return make_constant(1.0);
    case expr_kind::negate:
        return make_unary(expr_kind::negate, differentiate(e->lhs));
    case expr_kind::add:
        return make_binary(expr_kind::add, differentiate(e->lhs), differentiate(e->rhs));
    case expr_kind::sub:
        return make_binary(expr_kind::sub, differentiate(e->lhs), differentiate(e->rhs));
    case expr_kind::mul:
        return make_binary(expr_kind::add,
                           make_binary(expr_kind::mul, differentiate(e->lhs), e->rhs),
                           make_binary(expr_kind::mul, e->lhs, differentiate(e->rhs)));
    case expr_kind::div:
        // (u/v)' = (u'v - uv') / v^2
        return make_binary(
            expr_kind::div,
            make_binary(expr_kind::sub,
                        make_binary(expr_kind::mul, differentiate(e->lhs), e->rhs),
                        make_binary(expr_kind::mul, e->lhs, differentiate(e->rhs))),
            make_binary(expr_kind::pow, e->rhs, make_constant(2.0)));
    case expr_kind::pow:
        if (e->rhs->kind == expr_kind::constant) {
            double c = e->rhs->value;
            if (c == 0.0)
                return make_constant(0.0);
            if (c == 1.0)
                return differentiate(e->lhs);
            // (u^c)' = c u^{c-1} u'
            return make_binary(
                expr_kind::mul,
                make_binary(expr_kind::mul, make_constant(c),
                            make_binary(expr_kind::pow, e->lhs, make_constant(c - 1.0))),
                differentiate(e->lhs));
        }
        // u^v = exp(v ln u):  (u^v)' = u^v (v' ln u + v u'/u)
        return make_binary(
            expr_kind::mul, e,
            make_binary(expr_kind::add,
                        make_binary(expr_kind::mul, differentiate(e->rhs),
                                    make_unary(expr_kind::ln, e->lhs)),
                        make_binary(expr_kind::div,
                                    make_binary(expr_kind::mul, e->rhs, differentiate(e->lhs)),
                                    e->lhs)));
    case expr_kind::exp:
        return make_binary(expr_kind::mul, e, differentiate(e->lhs));
    case expr_kind::ln:
        return make_binary(expr_kind::div, differentiate(e->lhs), e->lhs);
    case expr_kind::sin:
        return make_binary(expr_kind::mul, make_unary(expr_kind::cos, e->lhs),
                           differentiate(e->lhs));
    case expr_kind::cos:
        return make_unary(expr_kind::negate,
                          make_binary(expr_kind::mul, make_unary(expr_kind::sin, e->lhs),
                                      differentiate(e->lhs)));
    case expr_kind::sqrt:
        return make_binary(expr_kind::div, differentiate(e->lhs),
                           make_binary(expr_kind::mul, make_constant(2.0), e));
    }
    std::abort(); // unreachable
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// Grammar levels: additive 1, multiplicative 2, unary minus 3, power 4, atom 5.
int precedence(const expr_node& e) {
    switch (e.kind) {
    case expr_kind::add:
    case expr_kind::sub:
        return 1;
    case expr_kind::mul:
    case expr_kind::div:
        return 2;
    case expr_kind::negate:
        return 3;
    case expr_kind::pow:
        return 4;
    case expr_kind::constant:
        return e.value < 0.0 ? 3 : 5; // "-2" prints like a negation
    default:
        return 5;
    }
}

bool atom_like(const expr_node& e) {
    switch (e.kind) {
    case expr_kind::variable:
    case expr_kind::exp:
    case expr_kind::ln:
    case expr_kind::sin:
    case expr_kind::cos:
    case expr_kind::sqrt:
    case expr_kind::negate:
        return true;
    case expr_kind::constant:
        return true;
    default:
        return false;
    }
}

std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void print(const expr_node& e, std::string& out) {
    auto child = [&out](const expr_node& c, bool parens) {
        if (parens)
            out.push_back('(');
        print(c, out);
        if (parens)
            out.push_back(')');
    };
    switch (e.kind) {
    case expr_kind::constant:
        out += format_number(e.value);
        return;
    case expr_kind::variable:
        out.push_back('x');
        return;
    case expr_kind::negate:
        out.push_back('-');
        // in the grammar '-' binds to a single atom
        child(*e.lhs, !atom_like(*e.lhs));
        return;
    case expr_kind::add:
    case expr_kind::sub: {
        child(*e.lhs, precedence(*e.lhs) < 1);
        out.push_back(e.kind == expr_kind::add ? '+' : '-');
        child(*e.rhs, precedence(*e.rhs) <= 1);
        return;
    }
    case expr_kind::mul:
    case expr_kind::div: {
        child(*e.lhs, precedence(*e.lhs) < 2);
        out.push_back(e.kind == expr_kind::mul ? '*' : '/');
        child(*e.rhs, precedence(*e.rhs) <= 2 && precedence(*e.rhs) != 3);
        return;
    }
    case expr_kind::pow: {
        // the base must read as a single atom, the exponent as a factor
        child(*e.lhs, precedence(*e.lhs) <= 4);
        out.push_back('^');
        child(*e.rhs, precedence(*e.rhs) < 4 && precedence(*e.rhs) != 3);
        return;
    }
    case expr_kind::exp:
        out += "exp(";
        print(*e.lhs, out);
        out.push_back(')');
        return;
    case expr_kind::ln:
        out += "ln(";
        print(*e.lhs, out);
        out.push_back(')');
        return;
    case expr_kind::sin:
        out += "sin(";
        print(*e.lhs, out);
        out.push_back(')');
        return;
    case expr_kind::cos:
        out += "cos(";
        print(*e.lhs, out);
        out.push_back(')');
        return;
    case expr_kind::sqrt:
        out += "sqrt(";
        print(*e.lhs, out);
        out.push_back(')');
        return;
    }
}

} // namespace

std::string to_string(const expr_node& e) {
    std::string out;
    print(e, out);
    return out;
}

bool structurally_equal(const expr_node& a, const expr_node& b) {
    if (a.kind != b.kind)
        return false;
    if (a.kind == expr_kind::constant) {
        // bitwise comparison, so that e.g. -0.0 round-trips honestly
        return (a.value == b.value && std::signbit(a.value) == std::signbit(b.value)) ||
               (std::isnan(a.value) && std::isnan(b.value));
    }
    if (a.lhs && !structurally_equal(*a.lhs, *b.lhs))
        return false;
    if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs))
        return false;
    if (a.rhs && !structurally_equal(*a.rhs, *b.rhs))
        return false;
    return true;
}

} // namespace fosc
