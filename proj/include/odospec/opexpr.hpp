#ifndef ODOSPEC_OPEXPR_HPP
#define ODOSPEC_OPEXPR_HPP

#include <memory>
#include <string>

#include "odospec/diffop.hpp"

namespace odospec {

/// AST for operator expressions over: integer literals, the imaginary unit i,
/// the variable t, the derivation D, + - * /, ^ with non-negative integer
/// exponents, and the function atoms exp/sin/cos.
///
/// Grammar (v1):
///   expr    := term (('+'|'-') term)*
///   term    := unary (('*'|'/') unary)*
///   unary   := ('-'|'+') unary | postfix
///   postfix := atom ('^' INT)*
///   atom    := INT | 'i' | 't' | 'D' | ('exp'|'sin'|'cos') '(' expr ')' | '(' expr ')'
struct OperatorExpr {
    enum class Tag { number, imag_unit, var_t, op_d, add, sub, neg, mul, div, pow, func };
    Tag tag = Tag::number;
    BigInt value;      // number
    std::string func;  // exp | sin | cos
    int exponent = 0;  // pow
    std::shared_ptr<const OperatorExpr> lhs, rhs;
    int line = 1, col = 1;
};

using ExprPtr = std::shared_ptr<const OperatorExpr>;

ExprPtr parse_operator(const std::string& src);
std::string pretty_print(const ExprPtr& e);
bool exprs_equal(const ExprPtr& a, const ExprPtr& b);

/// Evaluate the AST in the operator algebra at the given truncation order and
/// base point. Division requires an invertible order-0 divisor; function
/// atoms require an order-0 argument vanishing at the base point.
DiffOp lower_to_diffop(const ExprPtr& e, int order, const ExactScalar& t0);

} // namespace odospec

#endif
