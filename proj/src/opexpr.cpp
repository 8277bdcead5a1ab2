#include "odospec/opexpr.hpp"

#include <cctype>
#include <vector>

namespace odospec {

namespace {

struct Token {
    enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind = Kind::end;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Token::Kind::end;
            return;
        }
        const char ch = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                tok_.text += src_[pos_];
                bump();
            }
            tok_.kind = Token::Kind::number;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                tok_.text += src_[pos_];
                bump();
            }
            tok_.kind = Token::Kind::ident;
            return;
        }
        switch (ch) {
            case '+': tok_.kind = Token::Kind::plus; break;
            case '-': tok_.kind = Token::Kind::minus; break;
            case '*': tok_.kind = Token::Kind::star; break;
            case '/': tok_.kind = Token::Kind::slash; break;
            case '^': tok_.kind = Token::Kind::caret; break;
            case '(': tok_.kind = Token::Kind::lparen; break;
            case ')': tok_.kind = Token::Kind::rparen; break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'", line_, col_);
        }
        tok_.text = ch;
        bump();
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

ExprPtr make(OperatorExpr node) { return std::make_shared<const OperatorExpr>(std::move(node)); }

ExprPtr located(OperatorExpr::Tag tag, const Token& at) {
    OperatorExpr e;
    e.tag = tag;
    e.line = at.line;
    e.col = at.col;
    return make(std::move(e));
}

class Parser {
  public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::end)
            throw ParseError("trailing input starting at '" + t.text + "'", t.line, t.col);
        return e;
    }

  private:
    ExprPtr expr() {
        ExprPtr lhs = term();
        while (lex_.peek().kind == Token::Kind::plus || lex_.peek().kind == Token::Kind::minus) {
            Token op = lex_.take();
            ExprPtr rhs = term();
            OperatorExpr e;
            e.tag = op.kind == Token::Kind::plus ? OperatorExpr::Tag::add : OperatorExpr::Tag::sub;
            e.lhs = lhs;
            e.rhs = rhs;
            e.line = op.line;
            e.col = op.col;
            lhs = make(std::move(e));
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (lex_.peek().kind == Token::Kind::star || lex_.peek().kind == Token::Kind::slash) {
            Token op = lex_.take();
            ExprPtr rhs = unary();
            OperatorExpr e;
            e.tag = op.kind == Token::Kind::star ? OperatorExpr::Tag::mul : OperatorExpr::Tag::div;
            e.lhs = lhs;
            e.rhs = rhs;
            e.line = op.line;
            e.col = op.col;
            lhs = make(std::move(e));
        }
        return lhs;
    }

    ExprPtr unary() {
        if (lex_.peek().kind == Token::Kind::minus) {
            Token op = lex_.take();
            OperatorExpr e;
            e.tag = OperatorExpr::Tag::neg;
            e.lhs = unary();
            e.line = op.line;
            e.col = op.col;
            return make(std::move(e));
        }
        if (lex_.peek().kind == Token::Kind::plus) {
            lex_.take();
            return unary();
        }
        return postfix();
    }

    ExprPtr postfix() {
        ExprPtr base = atom();
        while (lex_.peek().kind == Token::Kind::caret) {
            Token op = lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::number)
                throw ParseError("exponent must be a non-negative integer literal", e.line, e.col);
            OperatorExpr node;
            node.tag = OperatorExpr::Tag::pow;
            node.lhs = base;
            node.exponent = std::stoi(e.text);
            node.line = op.line;
            node.col = op.col;
            base = make(std::move(node));
        }
        return base;
    }

    ExprPtr atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::number: {
                OperatorExpr e;
                e.tag = OperatorExpr::Tag::number;
                e.value = BigInt(t.text);
                e.line = t.line;
                e.col = t.col;
                return make(std::move(e));
            }
            case Token::Kind::ident: {
                if (t.text == "i") return located(OperatorExpr::Tag::imag_unit, t);
                if (t.text == "t") return located(OperatorExpr::Tag::var_t, t);
                if (t.text == "D") return located(OperatorExpr::Tag::op_d, t);
                if (t.text == "exp" || t.text == "sin" || t.text == "cos") {
                    Token open = lex_.take();
                    if (open.kind != Token::Kind::lparen)
                        throw ParseError("expected '(' after '" + t.text + "'", open.line, open.col);
                    ExprPtr arg = expr();
                    Token close = lex_.take();
                    if (close.kind != Token::Kind::rparen)
                        throw ParseError("expected ')'", close.line, close.col);
                    OperatorExpr e;
                    e.tag = OperatorExpr::Tag::func;
                    e.func = t.text;
                    e.lhs = arg;
                    e.line = t.line;
                    e.col = t.col;
                    return make(std::move(e));
                }
                throw ParseError("unsupported identifier '" + t.text +
                                     "' (expected i, t, D, exp, sin, cos)",
                                 t.line, t.col);
            }
            case Token::Kind::lparen: {
                ExprPtr e = expr();
                Token close = lex_.take();
                if (close.kind != Token::Kind::rparen)
                    throw ParseError("expected ')'", close.line, close.col);
                return e;
            }
            default:
                throw ParseError("expected an operand, found '" + t.text + "'", t.line, t.col);
        }
    }

    Lexer lex_;
};

int precedence(OperatorExpr::Tag tag) {
    switch (tag) {
        case OperatorExpr::Tag::add:
        case OperatorExpr::Tag::sub: return 1;
        case OperatorExpr::Tag::mul:
        case OperatorExpr::Tag::div: return 2;
        case OperatorExpr::Tag::neg: return 3;
        case OperatorExpr::Tag::pow: return 4;
        default: return 5;
    }
}

void print_node(const ExprPtr& e, int parent_prec, std::string& out) {
    const int prec = precedence(e->tag);
    const bool parens = prec < parent_prec;
    if (parens) out += "(";
    switch (e->tag) {
        case OperatorExpr::Tag::number: out += e->value.str(); break;
        case OperatorExpr::Tag::imag_unit: out += "i"; break;
        case OperatorExpr::Tag::var_t: out += "t"; break;
        case OperatorExpr::Tag::op_d: out += "D"; break;
        case OperatorExpr::Tag::add:
            print_node(e->lhs, prec, out);
            out += " + ";
            print_node(e->rhs, prec + 1, out);
            break;
        case OperatorExpr::Tag::sub:
            print_node(e->lhs, prec, out);
            out += " - ";
            print_node(e->rhs, prec + 1, out);
            break;
        case OperatorExpr::Tag::neg:
            out += "-";
            print_node(e->lhs, prec, out);
            break;
        case OperatorExpr::Tag::mul:
            print_node(e->lhs, prec, out);
            out += "*";
            print_node(e->rhs, prec + 1, out);
            break;
        case OperatorExpr::Tag::div:
            print_node(e->lhs, prec, out);
            out += "/";
            print_node(e->rhs, prec + 1, out);
            break;
        case OperatorExpr::Tag::pow:
            print_node(e->lhs, prec + 1, out);
            out += "^" + std::to_string(e->exponent);
            break;
        case OperatorExpr::Tag::func:
            out += e->func + "(";
            print_node(e->lhs, 0, out);
            out += ")";
            break;
    }
    if (parens) out += ")";
}

} // namespace

ExprPtr parse_operator(const std::string& src) { return Parser(src).parse(); }

std::string pretty_print(const ExprPtr& e) {
    std::string out;
    print_node(e, 0, out);
    return out;
}

bool exprs_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->tag != b->tag) return false;
    switch (a->tag) {
        case OperatorExpr::Tag::number: return a->value == b->value;
        case OperatorExpr::Tag::func:
            return a->func == b->func && exprs_equal(a->lhs, b->lhs);
        case OperatorExpr::Tag::pow:
            return a->exponent == b->exponent && exprs_equal(a->lhs, b->lhs);
        case OperatorExpr::Tag::neg: return exprs_equal(a->lhs, b->lhs);
        case OperatorExpr::Tag::add:
        case OperatorExpr::Tag::sub:
        case OperatorExpr::Tag::mul:
        case OperatorExpr::Tag::div:
            return exprs_equal(a->lhs, b->lhs) && exprs_equal(a->rhs, b->rhs);
        default: return true;
    }
}

DiffOp lower_to_diffop(const ExprPtr& e, int order, const ExactScalar& t0) {
    switch (e->tag) {
        case OperatorExpr::Tag::number:
            return DiffOp::mul_op(TaylorSeries::constant(ExactScalar(BigRational(e->value)), order, t0));
        case OperatorExpr::Tag::imag_unit:
            return DiffOp::mul_op(TaylorSeries::constant(ExactScalar::i(), order, t0));
        case OperatorExpr::Tag::var_t:
            return DiffOp::mul_op(TaylorSeries::variable(order, t0));
        case OperatorExpr::Tag::op_d:
            return DiffOp::d(order, t0);
        case OperatorExpr::Tag::add:
            return lower_to_diffop(e->lhs, order, t0) + lower_to_diffop(e->rhs, order, t0);
        case OperatorExpr::Tag::sub:
            return lower_to_diffop(e->lhs, order, t0) - lower_to_diffop(e->rhs, order, t0);
        case OperatorExpr::Tag::neg:
            return -lower_to_diffop(e->lhs, order, t0);
        case OperatorExpr::Tag::mul:
            return op_multiply(lower_to_diffop(e->lhs, order, t0),
                               lower_to_diffop(e->rhs, order, t0));
        case OperatorExpr::Tag::div: {
            DiffOp num = lower_to_diffop(e->lhs, order, t0);
            DiffOp den = lower_to_diffop(e->rhs, order, t0);
            if (den.is_zero() || den.order() != 0)
                throw ParseError("division requires an order-0 divisor", e->line, e->col);
            if (!den.coeff(0).is_invertible())
                throw ParseError("divisor vanishes at the base point", e->line, e->col);
            return op_multiply(num, DiffOp::mul_op(invert(den.coeff(0))));
        }
        case OperatorExpr::Tag::pow:
            return op_pow(lower_to_diffop(e->lhs, order, t0), e->exponent);
        case OperatorExpr::Tag::func: {
            DiffOp arg = lower_to_diffop(e->lhs, order, t0);
            if (!arg.is_zero() && arg.order() != 0)
                throw ParseError("function atoms take order-0 arguments", e->line, e->col);
            TaylorSeries s = arg.coeff(0);
            if (!s.constant_term().is_zero())
                throw ParseError("function argument must vanish at the base point: a "
                                 "transcendental constant term has no exact value",
                                 e->line, e->col);
            try {
                if (e->func == "exp") return DiffOp::mul_op(exp_series(s));
                if (e->func == "sin") return DiffOp::mul_op(sin_series(s));
                return DiffOp::mul_op(cos_series(s));
            } catch (const DomainError& err) {
                throw ParseError(err.what(), e->line, e->col);
            }
        }
    }
    throw DomainError("unreachable expression tag");
}

} // namespace odospec
