#include <cmath>

#include "fuzzyrel/error.hpp"
#include "fuzzyrel/expr.hpp"

namespace fuzzyrel {

namespace {

std::string describe(const Token& t) {
    if (t.kind == TokenKind::End) return "end of input";
    return "'" + t.text + "'";
}

// Recursive descent over a token vector that ends with TokenKind::End.
class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
        if (toks_.empty() || toks_.back().kind != TokenKind::End)
            throw InvalidArgument("token stream must end with an End token");
    }

    Expr expr() { return add_expr(); }

    RelationStatement statement() {
        Expr lhs = expr();
        Relation rel;
        switch (peek().kind) {
            case TokenKind::Le: rel = Relation::Subset; break;
            case TokenKind::Ge: rel = Relation::Superset; break;
            case TokenKind::EqEq: rel = Relation::Equal; break;
            default: fail("'<=', '>=' or '=='");
        }
        advance();
        Expr rhs = expr();
        std::vector<Constraint> constraints;
        if (accept(TokenKind::KwGiven)) {
            constraints.push_back(constraint());
            while (accept(TokenKind::Comma)) constraints.push_back(constraint());
        }
        std::optional<Condition> equality;
        if (accept(TokenKind::KwEqualityIff)) equality = condition();
        return make_statement(std::move(lhs), rel, std::move(rhs), std::move(constraints),
                              std::move(equality));
    }

    Condition condition() {
        Condition out;
        out.disjuncts.push_back(conjunction());
        while (accept(TokenKind::KwOr)) out.disjuncts.push_back(conjunction());
        return out;
    }

    Constraint constraint() {
        Arith lhs = arith();
        Comparator cmp;
        switch (peek().kind) {
            case TokenKind::Le: cmp = Comparator::Le; break;
            case TokenKind::Lt: cmp = Comparator::Lt; break;
            case TokenKind::Ge: cmp = Comparator::Ge; break;
            case TokenKind::Gt: cmp = Comparator::Gt; break;
            case TokenKind::Eq:
            case TokenKind::EqEq: cmp = Comparator::Eq; break;
            default: fail("a comparison operator");
        }
        advance();
        Arith rhs = arith();
        return Constraint{std::move(lhs), cmp, std::move(rhs)};
    }

    Arith arith() {
        Arith left = term();
        while (true) {
            if (accept(TokenKind::Plus)) {
                left = Arith::binary(Arith::Op::Add, std::move(left), term());
            } else if (accept(TokenKind::Minus)) {
                left = Arith::binary(Arith::Op::Sub, std::move(left), term());
            } else {
                return left;
            }
        }
    }

    void expect_end() {
        if (peek().kind != TokenKind::End) fail("end of input");
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    void advance() {
        if (toks_[pos_].kind != TokenKind::End) ++pos_;
    }
    bool accept(TokenKind kind) {
        if (peek().kind != kind) return false;
        advance();
        return true;
    }
    void expect(TokenKind kind) {
        if (!accept(kind)) fail(std::string(to_string(kind)));
    }
    [[noreturn]] void fail(std::string expected) const {
        throw ParseError(peek().position, std::move(expected), describe(peek()));
    }

    std::optional<BinaryOp> additive_op() const {
        switch (peek().kind) {
            case TokenKind::Union: return BinaryOp::Union;
            case TokenKind::AlgSum: return BinaryOp::AlgebraicSum;
            case TokenKind::BoundedSum: return BinaryOp::BoundedSum;
            case TokenKind::BoundedDiff: return BinaryOp::BoundedDifference;
            default: return std::nullopt;
        }
    }

    std::optional<BinaryOp> multiplicative_op() const {
        switch (peek().kind) {
            case TokenKind::Intersection: return BinaryOp::Intersection;
            case TokenKind::AlgProd: return BinaryOp::AlgebraicProduct;
            case TokenKind::BoundedProd: return BinaryOp::BoundedProduct;
            case TokenKind::BoundedQuot: return BinaryOp::BoundedQuotient;
            default: return std::nullopt;
        }
    }

    Expr add_expr() {
        Expr left = mul_expr();
        while (auto op = additive_op()) {
            advance();
            left = Expr::binary(*op, std::move(left), mul_expr());
        }
        return left;
    }

    Expr mul_expr() {
        Expr left = scaled();
        while (auto op = multiplicative_op()) {
            advance();
            left = Expr::binary(*op, std::move(left), scaled());
        }
        return left;
    }

    // scaled := NUMBER "*" scaled | postfix [ "/" NUMBER ]
    Expr scaled() {
        if (peek().kind == TokenKind::Number) {
            const Token num = peek();
            advance();
            expect(TokenKind::Star);
            if (!is_valid_scale(num.number))
                throw ParseError(num.position, "a scalar in [0, 1] or a natural number", describe(num));
            return Expr::scale(num.number, scaled());
        }
        Expr inner = postfix();
        if (accept(TokenKind::Slash)) {
            const Token num = peek();
            if (num.kind != TokenKind::Number) fail("number");
            if (!(num.number >= 1.0))
                throw ParseError(num.position, "a divisor >= 1", describe(num));
            advance();
            return Expr::scale(1.0 / num.number, std::move(inner));
        }
        return inner;
    }

    Expr postfix() {
        Expr base = atom();
        if (accept(TokenKind::Caret)) {
            const Token num = peek();
            if (num.kind != TokenKind::Number) fail("numeric exponent");
            advance();
            return Expr::power(std::move(base), num.number);
        }
        return base;
    }

    Expr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::SetVar: {
                Expr e = Expr::var(t.text);
                advance();
                return e;
            }
            case TokenKind::Universal: advance(); return Expr::universal();
            case TokenKind::Empty: advance(); return Expr::empty();
            case TokenKind::LParen: {
                advance();
                Expr e = expr();
                expect(TokenKind::RParen);
                return e;
            }
            default: fail("expression");
        }
    }

    std::vector<Constraint> conjunction() {
        std::vector<Constraint> out;
        out.push_back(constraint());
        while (accept(TokenKind::KwAnd)) out.push_back(constraint());
        return out;
    }

    Arith term() {
        Arith left = unary();
        while (true) {
            if (accept(TokenKind::Star)) {
                left = Arith::binary(Arith::Op::Mul, std::move(left), unary());
            } else if (accept(TokenKind::Slash)) {
                left = Arith::binary(Arith::Op::Div, std::move(left), unary());
            } else {
                return left;
            }
        }
    }

    Arith unary() {
        if (accept(TokenKind::Minus)) return Arith::negate(unary());
        return power();
    }

    // Right-associative: a^b^c = a^(b^c).
    Arith power() {
        Arith base = primary();
        if (accept(TokenKind::Caret)) return Arith::binary(Arith::Op::Pow, std::move(base), unary());
        return base;
    }

    Arith primary() {
        const Token t = peek();
        switch (t.kind) {
            case TokenKind::Number: advance(); return Arith::number(t.number);
            case TokenKind::DegreeVar: {
                advance();
                if (peek().kind == TokenKind::LParen) return call(t);
                if (t.text == "min" || t.text == "max" || t.text == "sqrt")
                    throw ParseError(t.position, "'(' after function name", describe(peek()));
                return Arith::variable(t.text);
            }
            case TokenKind::LParen: {
                advance();
                Arith inner = arith();
                expect(TokenKind::RParen);
                return inner;
            }
            default: fail("arithmetic term");
        }
    }

    Arith call(const Token& name) {
        Arith::Func func;
        if (name.text == "min") func = Arith::Func::Min;
        else if (name.text == "max") func = Arith::Func::Max;
        else if (name.text == "sqrt") func = Arith::Func::Sqrt;
        else throw ParseError(name.position, "function min, max or sqrt", describe(name));
        expect(TokenKind::LParen);
        std::vector<Arith> args;
        args.push_back(arith());
        while (accept(TokenKind::Comma)) args.push_back(arith());
        const Token& close = peek();
        expect(TokenKind::RParen);
        const std::size_t want = func == Arith::Func::Sqrt ? 1 : 2;
        if (args.size() != want)
            throw ParseError(close.position, std::to_string(want) + " argument(s)",
                             std::to_string(args.size()) + " argument(s)");
        return Arith::call(func, std::move(args));
    }

    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;
};

template <class F>
auto parse_whole(std::string_view input, F&& f) {
    const auto tokens = tokenize(input);
    Parser p(tokens);
    auto result = f(p);
    p.expect_end();
    return result;
}

}  // namespace

Expr parse_expr(const std::vector<Token>& tokens) {
    Parser p(tokens);
    Expr e = p.expr();
    p.expect_end();
    return e;
}

Expr parse_expr(std::string_view input) {
    return parse_whole(input, [](Parser& p) { return p.expr(); });
}

RelationStatement parse_statement(std::string_view input) {
    return parse_whole(input, [](Parser& p) { return p.statement(); });
}

Constraint parse_constraint(std::string_view input) {
    return parse_whole(input, [](Parser& p) { return p.constraint(); });
}

Condition parse_condition(std::string_view input) {
    return parse_whole(input, [](Parser& p) { return p.condition(); });
}

Arith parse_arith(std::string_view input) {
    return parse_whole(input, [](Parser& p) { return p.arith(); });
}

}  // namespace fuzzyrel
