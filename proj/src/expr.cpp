#include "fuzzyrel/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "fuzzyrel/error.hpp"

namespace fuzzyrel {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void append_unique(std::vector<std::string>& out, const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
}

void collect(const Expr& e, std::vector<std::string>& out) {
    std::visit(overloaded{
                   [&](const Expr::Var& v) { append_unique(out, v.name); },
                   [](const Expr::Universal&) {},
                   [](const Expr::Empty&) {},
                   [&](const Expr::Binary& b) {
                       collect(b.left, out);
                       collect(b.right, out);
                   },
                   [&](const Expr::Scale& s) { collect(s.inner, out); },
                   [&](const Expr::Power& p) { collect(p.base, out); },
               },
               e.node().value);
}

void collect(const Arith& a, std::vector<std::string>& out) {
    std::visit(overloaded{
                   [](const Arith::Number&) {},
                   [&](const Arith::Variable& v) { append_unique(out, v.name); },
                   [&](const Arith::Negate& n) { collect(n.inner, out); },
                   [&](const Arith::Binary& b) {
                       collect(b.left, out);
                       collect(b.right, out);
                   },
                   [&](const Arith::Call& c) {
                       for (const auto& arg : c.args) collect(arg, out);
                   },
               },
               a.node().value);
}

void collect_constraint(const Constraint& c, std::vector<std::string>& out) {
    std::vector<std::string> degrees;
    collect(c.lhs, degrees);
    collect(c.rhs, degrees);
    for (const auto& d : degrees) append_unique(out, set_variable_for(d));
}

}  // namespace

bool is_valid_set_variable(std::string_view name) noexcept {
    if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0]))) return false;
    if (name == "X" || name == "O") return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

bool is_valid_scale(double kappa) noexcept {
    if (!std::isfinite(kappa)) return false;
    if (kappa >= 0.0 && kappa <= 1.0) return true;
    return kappa > 1.0 && kappa == std::floor(kappa);
}

Expr Expr::var(std::string name) {
    if (!is_valid_set_variable(name)) throw InvalidArgument("invalid set variable '" + name + "'");
    return Expr(std::make_shared<const ExprNode>(ExprNode{Var{std::move(name)}}));
}

Expr Expr::universal() { return Expr(std::make_shared<const ExprNode>(ExprNode{Universal{}})); }

Expr Expr::empty() { return Expr(std::make_shared<const ExprNode>(ExprNode{Empty{}})); }

Expr Expr::binary(BinaryOp op, Expr left, Expr right) {
    return Expr(std::make_shared<const ExprNode>(
        ExprNode{Binary{op, std::move(left), std::move(right)}}));
}

Expr Expr::scale(double kappa, Expr inner) {
    if (!is_valid_scale(kappa)) throw ScalarOutOfRange(kappa);
    return Expr(std::make_shared<const ExprNode>(ExprNode{Scale{kappa, std::move(inner)}}));
}

Expr Expr::power(Expr base, double exponent) {
    if (!(exponent >= 0.0) || !std::isfinite(exponent)) throw NegativeExponent(exponent);
    return Expr(std::make_shared<const ExprNode>(ExprNode{Power{std::move(base), exponent}}));
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    return std::visit(overloaded{
                          [&](const Expr::Var& x) {
                              auto y = b.as<Expr::Var>();
                              return y && x.name == y->name;
                          },
                          [&](const Expr::Universal&) { return b.as<Expr::Universal>() != nullptr; },
                          [&](const Expr::Empty&) { return b.as<Expr::Empty>() != nullptr; },
                          [&](const Expr::Binary& x) {
                              auto y = b.as<Expr::Binary>();
                              return y && x.op == y->op && x.left == y->left && x.right == y->right;
                          },
                          [&](const Expr::Scale& x) {
                              auto y = b.as<Expr::Scale>();
                              return y && x.kappa == y->kappa && x.inner == y->inner;
                          },
                          [&](const Expr::Power& x) {
                              auto y = b.as<Expr::Power>();
                              return y && x.exponent == y->exponent && x.base == y->base;
                          },
                      },
                      a.node().value);
}

std::vector<std::string> free_variables(const Expr& e) {
    std::vector<std::string> out;
    collect(e, out);
    return out;
}

bool is_multiplicative(BinaryOp op) noexcept {
    switch (op) {
        case BinaryOp::Intersection:
        case BinaryOp::AlgebraicProduct:
        case BinaryOp::BoundedProduct:
        case BinaryOp::BoundedQuotient:
            return true;
        default:
            return false;
    }
}

std::string_view op_symbol(BinaryOp op) noexcept {
    switch (op) {
        case BinaryOp::Union: return "|";
        case BinaryOp::Intersection: return "&";
        case BinaryOp::AlgebraicSum: return ".+";
        case BinaryOp::AlgebraicProduct: return ".*";
        case BinaryOp::BoundedSum: return "[+]";
        case BinaryOp::BoundedProduct: return "[*]";
        case BinaryOp::BoundedDifference: return "[-]";
        case BinaryOp::BoundedQuotient: return "[/]";
    }
    return "?";
}

Arith Arith::number(double value) {
    return Arith(std::make_shared<const ArithNode>(ArithNode{Number{value}}));
}

Arith Arith::variable(std::string name) {
    return Arith(std::make_shared<const ArithNode>(ArithNode{Variable{std::move(name)}}));
}

Arith Arith::negate(Arith inner) {
    return Arith(std::make_shared<const ArithNode>(ArithNode{Negate{std::move(inner)}}));
}

Arith Arith::binary(Op op, Arith left, Arith right) {
    return Arith(std::make_shared<const ArithNode>(
        ArithNode{Binary{op, std::move(left), std::move(right)}}));
}

Arith Arith::call(Func func, std::vector<Arith> args) {
    const std::size_t want = func == Func::Sqrt ? 1 : 2;
    if (args.size() != want) throw InvalidArgument("wrong number of function arguments");
    return Arith(std::make_shared<const ArithNode>(ArithNode{Call{func, std::move(args)}}));
}

bool operator==(const Arith& a, const Arith& b) {
    if (a.node_ == b.node_) return true;
    return std::visit(overloaded{
                          [&](const Arith::Number& x) {
                              auto y = b.as<Arith::Number>();
                              return y && x.value == y->value;
                          },
                          [&](const Arith::Variable& x) {
                              auto y = b.as<Arith::Variable>();
                              return y && x.name == y->name;
                          },
                          [&](const Arith::Negate& x) {
                              auto y = b.as<Arith::Negate>();
                              return y && x.inner == y->inner;
                          },
                          [&](const Arith::Binary& x) {
                              auto y = b.as<Arith::Binary>();
                              return y && x.op == y->op && x.left == y->left && x.right == y->right;
                          },
                          [&](const Arith::Call& x) {
                              auto y = b.as<Arith::Call>();
                              return y && x.func == y->func && x.args == y->args;
                          },
                      },
                      a.node().value);
}

std::vector<std::string> free_variables(const Arith& a) {
    std::vector<std::string> out;
    collect(a, out);
    return out;
}

std::string_view to_string(Comparator cmp) noexcept {
    switch (cmp) {
        case Comparator::Le: return "<=";
        case Comparator::Lt: return "<";
        case Comparator::Ge: return ">=";
        case Comparator::Gt: return ">";
        case Comparator::Eq: return "=";
    }
    return "?";
}

std::string_view to_string(Relation rel) noexcept {
    switch (rel) {
        case Relation::Subset: return "<=";
        case Relation::Superset: return ">=";
        case Relation::Equal: return "==";
    }
    return "?";
}

std::string degree_alias(std::string_view set_variable) {
    std::string out(set_variable);
    if (!out.empty()) out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
    return out;
}

std::string set_variable_for(std::string_view degree_variable) {
    std::string out(degree_variable);
    if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
}

void collect_variables(RelationStatement& s) {
    std::vector<std::string> out;
    collect(s.lhs, out);
    collect(s.rhs, out);
    for (const auto& c : s.constraints) collect_constraint(c, out);
    if (s.equality_condition) {
        for (const auto& conj : s.equality_condition->disjuncts)
            for (const auto& c : conj) collect_constraint(c, out);
    }
    s.variables = std::move(out);
}

RelationStatement make_statement(Expr lhs, Relation rel, Expr rhs,
                                 std::vector<Constraint> constraints,
                                 std::optional<Condition> equality_condition) {
    RelationStatement s{std::move(lhs), rel, std::move(rhs), {}, std::move(constraints),
                        std::move(equality_condition)};
    collect_variables(s);
    return s;
}

}  // namespace fuzzyrel
