#include <array>
#include <charconv>

#include "fuzzyrel/expr.hpp"

namespace fuzzyrel {

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

namespace {

bool is_atom(const Expr& e) {
    return e.as<Expr::Var>() || e.as<Expr::Universal>() || e.as<Expr::Empty>();
}

std::string parens(std::string s) { return "(" + s + ")"; }

// Operand of a scaling prefix must be a `scaled` production.
std::string format_scaled_operand(const Expr& e) {
    if (e.as<Expr::Binary>()) return parens(format_expr(e));
    return format_expr(e);
}

std::string format_binary(const Expr::Binary& b) {
    const bool mul = is_multiplicative(b.op);
    std::string left = format_expr(b.left);
    if (auto lb = b.left.as<Expr::Binary>(); lb && mul && !is_multiplicative(lb->op))
        left = parens(std::move(left));
    std::string right = format_expr(b.right);
    if (auto rb = b.right.as<Expr::Binary>(); rb && (mul || !is_multiplicative(rb->op)))
        right = parens(std::move(right));
    return left + " " + std::string(op_symbol(b.op)) + " " + right;
}

std::string arith_op(Arith::Op op) {
    switch (op) {
        case Arith::Op::Add: return "+";
        case Arith::Op::Sub: return "-";
        case Arith::Op::Mul: return "*";
        case Arith::Op::Div: return "/";
        case Arith::Op::Pow: return "^";
    }
    return "?";
}

int arith_rank(const Arith& a) {
    if (auto b = a.as<Arith::Binary>()) {
        switch (b->op) {
            case Arith::Op::Add:
            case Arith::Op::Sub: return 1;
            case Arith::Op::Mul:
            case Arith::Op::Div: return 2;
            case Arith::Op::Pow: return 4;
        }
    }
    if (a.as<Arith::Negate>()) return 3;
    return 5;
}

}  // namespace

std::string format_expr(const Expr& e) {
    if (auto v = e.as<Expr::Var>()) return v->name;
    if (e.as<Expr::Universal>()) return "X";
    if (e.as<Expr::Empty>()) return "O";
    if (auto b = e.as<Expr::Binary>()) return format_binary(*b);
    if (auto s = e.as<Expr::Scale>())
        return format_number(s->kappa) + " * " + format_scaled_operand(s->inner);
    const auto& p = *e.as<Expr::Power>();
    std::string base = format_expr(p.base);
    if (!is_atom(p.base)) base = parens(std::move(base));
    return base + "^" + format_number(p.exponent);
}

std::string format_arith(const Arith& a) {
    if (auto n = a.as<Arith::Number>()) return format_number(n->value);
    if (auto v = a.as<Arith::Variable>()) return v->name;
    if (auto n = a.as<Arith::Negate>()) {
        std::string inner = format_arith(n->inner);
        if (arith_rank(n->inner) < 3) inner = parens(std::move(inner));
        return "-" + inner;
    }
    if (auto c = a.as<Arith::Call>()) {
        std::string out = c->func == Arith::Func::Min   ? "min("
                          : c->func == Arith::Func::Max ? "max("
                                                        : "sqrt(";
        for (std::size_t i = 0; i < c->args.size(); ++i) {
            if (i) out += ", ";
            out += format_arith(c->args[i]);
        }
        return out + ")";
    }
    const auto& b = *a.as<Arith::Binary>();
    const int rank = arith_rank(a);
    std::string left = format_arith(b.left);
    std::string right = format_arith(b.right);
    if (b.op == Arith::Op::Pow) {
        // Base must be a primary; exponent may be a unary or power.
        if (arith_rank(b.left) < 5) left = parens(std::move(left));
        if (arith_rank(b.right) < 3) right = parens(std::move(right));
        return left + "^" + right;
    }
    if (arith_rank(b.left) < rank) left = parens(std::move(left));
    if (arith_rank(b.right) <= rank) right = parens(std::move(right));
    return left + " " + arith_op(b.op) + " " + right;
}

std::string format_constraint(const Constraint& c) {
    return format_arith(c.lhs) + " " + std::string(to_string(c.cmp)) + " " + format_arith(c.rhs);
}

std::string format_condition(const Condition& c) {
    std::string out;
    for (std::size_t i = 0; i < c.disjuncts.size(); ++i) {
        if (i) out += " or ";
        for (std::size_t j = 0; j < c.disjuncts[i].size(); ++j) {
            if (j) out += " and ";
            out += format_constraint(c.disjuncts[i][j]);
        }
    }
    return out;
}

std::string format_statement(const RelationStatement& s) {
    std::string out = format_expr(s.lhs) + " " + std::string(to_string(s.relation)) + " " +
                      format_expr(s.rhs);
    if (!s.constraints.empty()) {
        out += " given ";
        for (std::size_t i = 0; i < s.constraints.size(); ++i) {
            if (i) out += ", ";
            out += format_constraint(s.constraints[i]);
        }
    }
    if (s.equality_condition) out += " equality_iff " + format_condition(*s.equality_condition);
    return out;
}

}  // namespace fuzzyrel
