#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "fosc/errors.hpp"

namespace fosc {

enum class expr_kind {
    constant,
    variable, // the single variable x
    negate,
    add,
    sub,
    mul,
    div,
    pow,
    exp,
    ln,
    sin,
    cos,
    sqrt,
};

struct expr_node;
using expr_ptr = std::shared_ptr<const expr_node>;

/// Immutable arithmetic expression tree in the single variable x.
/// lhs/rhs are null for leaves; rhs is null for unary nodes.
struct expr_node {
    expr_kind kind;
    double value = 0.0; // constant payload
    expr_ptr lhs;
    expr_ptr rhs;
};

bool is_unary(expr_kind k);
bool is_binary(expr_kind k);

// Node builders. Literal-only subtrees are folded to constants when the
// folded value is finite and in-domain.
expr_ptr make_constant(double v);
expr_ptr make_variable();
expr_ptr make_unary(expr_kind k, expr_ptr operand);
expr_ptr make_binary(expr_kind k, expr_ptr lhs, expr_ptr rhs);

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' factor)?
///   atom   := number | 'x' | func '(' expr ')' | '(' expr ')' | '-' atom
///   func   := exp | ln | sin | cos | sqrt
/// Throws parse_error with the byte offset of the offending token.
expr_ptr parse_expression(std::string_view text);

/// Evaluates at x. Throws eval_error on domain violations (ln/sqrt of
/// negative arguments, division by zero, non-integer powers of negative
/// bases), carrying the offending input value.
double evaluate(const expr_node& e, double x);
inline double evaluate(const expr_ptr& e, double x) { return evaluate(*e, x); }

/// Symbolic derivative d/dx. Always stays within the grammar: pow with a
/// constant exponent uses the power rule, otherwise u^v is differentiated
/// through the exp(v*ln u) rewrite.
expr_ptr differentiate(const expr_ptr& e);

/// Prints a string that re-parses to a structurally identical tree.
std::string to_string(const expr_node& e);
inline std::string to_string(const expr_ptr& e) { return to_string(*e); }

bool structurally_equal(const expr_node& a, const expr_node& b);
inline bool structurally_equal(const expr_ptr& a, const expr_ptr& b) {
    return structurally_equal(*a, *b);
}

} // namespace fosc
