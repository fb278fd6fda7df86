#include "fuzzyrel/eval.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "fuzzyrel/error.hpp"

namespace fuzzyrel {

namespace {

const Universe& shared_universe(const SetEnv& env) {
    static const Universe kEmpty;
    if (env.empty()) return kEmpty;
    const Universe& u = env.begin()->second.universe();
    for (const auto& [name, set] : env) {
        if (!(set.universe() == u)) throw UniverseMismatch();
    }
    return u;
}

FuzzySet eval_set_impl(const Expr& e, const SetEnv& env, const Universe& u, QuotientMode mode) {
    if (auto v = e.as<Expr::Var>()) {
        auto it = env.find(v->name);
        if (it == env.end()) throw UnboundVariable(v->name);
        return it->second;
    }
    if (e.as<Expr::Universal>()) return universal_set(u);
    if (e.as<Expr::Empty>()) return empty_set(u);
    if (auto b = e.as<Expr::Binary>()) {
        return apply(b->op, eval_set_impl(b->left, env, u, mode),
                     eval_set_impl(b->right, env, u, mode), mode);
    }
    if (auto s = e.as<Expr::Scale>()) {
        FuzzySet inner = eval_set_impl(s->inner, env, u, mode);
        return s->kappa <= 1.0 ? scalar_multiply(s->kappa, inner)
                               : natural_multiple(s->kappa, inner);
    }
    const auto& p = *e.as<Expr::Power>();
    return power(eval_set_impl(p.base, env, u, mode), p.exponent);
}

std::size_t slot_of(const std::vector<std::string>& variables, const std::string& name) {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) throw UnboundVariable(name);
    return static_cast<std::size_t>(it - variables.begin());
}

// Small fixed stack for the common case, heap fallback for deep programs.
template <class Run>
double with_stack(std::size_t depth, Run&& run) {
    if (depth <= 32) {
        std::array<double, 32> stack;
        return run(stack.data());
    }
    std::vector<double> stack(depth);
    return run(stack.data());
}

}  // namespace

FuzzySet eval_set(const Expr& e, const SetEnv& env, QuotientMode mode) {
    return eval_set_impl(e, env, shared_universe(env), mode);
}

double eval_degree(const Expr& e, const DegreeEnv& env, QuotientMode mode) {
    if (auto v = e.as<Expr::Var>()) {
        auto it = env.find(v->name);
        if (it == env.end()) throw UnboundVariable(v->name);
        if (!is_valid_degree(it->second)) throw DegreeOutOfRange(0, it->second);
        return it->second;
    }
    if (e.as<Expr::Universal>()) return 1.0;
    if (e.as<Expr::Empty>()) return 0.0;
    if (auto b = e.as<Expr::Binary>()) {
        const double l = eval_degree(b->left, env, mode);
        const double r = eval_degree(b->right, env, mode);
        return kernel::apply(b->op, l, r, mode);
    }
    if (auto s = e.as<Expr::Scale>()) {
        const double inner = eval_degree(s->inner, env, mode);
        return s->kappa <= 1.0 ? kernel::scale(s->kappa, inner) : kernel::multiple(s->kappa, inner);
    }
    const auto& p = *e.as<Expr::Power>();
    return kernel::power(eval_degree(p.base, env, mode), p.exponent);
}

double eval_arith(const Arith& a, const ArithEnv& env) {
    if (auto n = a.as<Arith::Number>()) return n->value;
    if (auto v = a.as<Arith::Variable>()) {
        auto it = env.find(v->name);
        if (it == env.end()) throw UnboundVariable(v->name);
        return it->second;
    }
    if (auto n = a.as<Arith::Negate>()) return -eval_arith(n->inner, env);
    if (auto c = a.as<Arith::Call>()) {
        const double x = eval_arith(c->args[0], env);
        if (c->func == Arith::Func::Sqrt) return std::sqrt(x);
        const double y = eval_arith(c->args[1], env);
        return c->func == Arith::Func::Min ? std::min(x, y) : std::max(x, y);
    }
    const auto& b = *a.as<Arith::Binary>();
    const double l = eval_arith(b.left, env);
    const double r = eval_arith(b.right, env);
    switch (b.op) {
        case Arith::Op::Add: return l + r;
        case Arith::Op::Sub: return l - r;
        case Arith::Op::Mul: return l * r;
        case Arith::Op::Div: return l / r;
        case Arith::Op::Pow: return std::pow(l, r);
    }
    return 0.0;
}

bool compare(double lhs, Comparator cmp, double rhs, double slack) noexcept {
    switch (cmp) {
        case Comparator::Le: return lhs <= rhs + slack;
        case Comparator::Lt: return lhs + slack < rhs;
        case Comparator::Ge: return lhs + slack >= rhs;
        case Comparator::Gt: return lhs > rhs + slack;
        case Comparator::Eq: return std::fabs(lhs - rhs) <= slack;
    }
    return false;
}

bool holds(const Constraint& c, const ArithEnv& env, double slack) {
    return compare(eval_arith(c.lhs, env), c.cmp, eval_arith(c.rhs, env), slack);
}

bool holds(const Condition& c, const ArithEnv& env, double slack) {
    return std::any_of(c.disjuncts.begin(), c.disjuncts.end(), [&](const auto& conj) {
        return std::all_of(conj.begin(), conj.end(),
                           [&](const Constraint& k) { return holds(k, env, slack); });
    });
}

bool relation_holds(double lhs, Relation rel, double rhs, double slack) noexcept {
    switch (rel) {
        case Relation::Subset: return lhs <= rhs + slack;
        case Relation::Superset: return lhs + slack >= rhs;
        case Relation::Equal: return std::fabs(lhs - rhs) <= slack;
    }
    return false;
}

// --- CompiledExpr ----------------------------------------------------------

CompiledExpr::CompiledExpr(const Expr& e, const std::vector<std::string>& variables) {
    emit(e, variables, 1);
}

void CompiledExpr::emit(const Expr& e, const std::vector<std::string>& variables,
                        std::size_t depth) {
    max_depth_ = std::max(max_depth_, depth);
    if (auto v = e.as<Expr::Var>()) {
        code_.push_back({Code::Load, slot_of(variables, v->name)});
    } else if (e.as<Expr::Universal>()) {
        code_.push_back({Code::One});
    } else if (e.as<Expr::Empty>()) {
        code_.push_back({Code::Zero});
    } else if (auto b = e.as<Expr::Binary>()) {
        emit(b->left, variables, depth);
        emit(b->right, variables, depth + 1);
        code_.push_back({Code::Binary, 0, b->op});
    } else if (auto s = e.as<Expr::Scale>()) {
        emit(s->inner, variables, depth);
        code_.push_back({s->kappa <= 1.0 ? Code::Scale : Code::Multiple, 0, BinaryOp::Union,
                         s->kappa});
    } else {
        const auto& p = *e.as<Expr::Power>();
        emit(p.base, variables, depth);
        code_.push_back({Code::Power, 0, BinaryOp::Union, p.exponent});
    }
}

double CompiledExpr::eval(std::span<const double> values, QuotientMode mode) const {
    return with_stack(max_depth_, [&](double* stack) {
        std::size_t top = 0;
        for (const Instr& in : code_) {
            switch (in.code) {
                case Code::Load: stack[top++] = values[in.slot]; break;
                case Code::One: stack[top++] = 1.0; break;
                case Code::Zero: stack[top++] = 0.0; break;
                case Code::Binary:
                    --top;
                    stack[top - 1] = kernel::apply(in.op, stack[top - 1], stack[top], mode);
                    break;
                case Code::Scale: stack[top - 1] = kernel::scale(in.param, stack[top - 1]); break;
                case Code::Multiple:
                    stack[top - 1] = kernel::multiple(in.param, stack[top - 1]);
                    break;
                case Code::Power: stack[top - 1] = kernel::power(stack[top - 1], in.param); break;
            }
        }
        return stack[0];
    });
}

// --- CompiledArith ---------------------------------------------------------

CompiledArith::CompiledArith(const Arith& a, const std::vector<std::string>& variables) {
    emit(a, variables, 1);
}

void CompiledArith::emit(const Arith& a, const std::vector<std::string>& variables,
                         std::size_t depth) {
    max_depth_ = std::max(max_depth_, depth);
    if (auto n = a.as<Arith::Number>()) {
        code_.push_back({Code::Const, 0, n->value});
    } else if (auto v = a.as<Arith::Variable>()) {
        code_.push_back({Code::Load, slot_of(variables, v->name)});
    } else if (auto n = a.as<Arith::Negate>()) {
        emit(n->inner, variables, depth);
        code_.push_back({Code::Neg});
    } else if (auto c = a.as<Arith::Call>()) {
        for (std::size_t i = 0; i < c->args.size(); ++i) emit(c->args[i], variables, depth + i);
        code_.push_back({c->func == Arith::Func::Min   ? Code::Min
                         : c->func == Arith::Func::Max ? Code::Max
                                                       : Code::Sqrt});
    } else {
        const auto& b = *a.as<Arith::Binary>();
        emit(b.left, variables, depth);
        emit(b.right, variables, depth + 1);
        Code code = Code::Add;
        switch (b.op) {
            case Arith::Op::Add: code = Code::Add; break;
            case Arith::Op::Sub: code = Code::Sub; break;
            case Arith::Op::Mul: code = Code::Mul; break;
            case Arith::Op::Div: code = Code::Div; break;
            case Arith::Op::Pow: code = Code::Pow; break;
        }
        code_.push_back({code});
    }
}

double CompiledArith::eval(std::span<const double> values) const {
    return with_stack(max_depth_, [&](double* stack) {
        std::size_t top = 0;
        for (const Instr& in : code_) {
            switch (in.code) {
                case Code::Load: stack[top++] = values[in.slot]; break;
                case Code::Const: stack[top++] = in.value; break;
                case Code::Neg: stack[top - 1] = -stack[top - 1]; break;
                case Code::Sqrt: stack[top - 1] = std::sqrt(stack[top - 1]); break;
                default: {
                    --top;
                    const double l = stack[top - 1];
                    const double r = stack[top];
                    double out = 0.0;
                    switch (in.code) {
                        case Code::Add: out = l + r; break;
                        case Code::Sub: out = l - r; break;
                        case Code::Mul: out = l * r; break;
                        case Code::Div: out = l / r; break;
                        case Code::Pow: out = std::pow(l, r); break;
                        case Code::Min: out = std::min(l, r); break;
                        case Code::Max: out = std::max(l, r); break;
                        default: break;
                    }
                    stack[top - 1] = out;
                }
            }
        }
        return stack[0];
    });
}

CompiledConstraint::CompiledConstraint(const Constraint& c,
                                       const std::vector<std::string>& variables)
    : lhs(c.lhs, variables), cmp(c.cmp), rhs(c.rhs, variables) {}

bool CompiledConstraint::holds(std::span<const double> values, double slack) const {
    return compare(lhs.eval(values), cmp, rhs.eval(values), slack);
}

CompiledCondition::CompiledCondition(const Condition& c,
                                     const std::vector<std::string>& variables) {
    for (const auto& conj : c.disjuncts) {
        auto& out = disjuncts.emplace_back();
        for (const auto& k : conj) out.emplace_back(k, variables);
    }
}

bool CompiledCondition::holds(std::span<const double> values, double slack) const {
    return std::any_of(disjuncts.begin(), disjuncts.end(), [&](const auto& conj) {
        return std::all_of(conj.begin(), conj.end(),
                           [&](const CompiledConstraint& k) { return k.holds(values, slack); });
    });
}

// --- CompiledStatement -----------------------------------------------------

namespace {

std::vector<std::string> aliases(const std::vector<std::string>& variables) {
    std::vector<std::string> out;
    out.reserve(variables.size());
    for (const auto& v : variables) out.push_back(degree_alias(v));
    return out;
}

}  // namespace

CompiledStatement::CompiledStatement(const RelationStatement& s)
    : variables_(s.variables),
      relation_(s.relation),
      lhs_(s.lhs, s.variables),
      rhs_(s.rhs, s.variables) {
    const auto degree_names = aliases(s.variables);
    for (const auto& c : s.constraints) constraints_.emplace_back(c, degree_names);
    if (s.equality_condition) equality_.emplace(*s.equality_condition, degree_names);
}

bool CompiledStatement::constraints_hold(std::span<const double> values, double slack) const {
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const CompiledConstraint& c) { return c.holds(values, slack); });
}

bool CompiledStatement::equality_condition_holds(std::span<const double> values,
                                                 double slack) const {
    return equality_ && equality_->holds(values, slack);
}

double CompiledStatement::lhs(std::span<const double> values, QuotientMode mode) const {
    return lhs_.eval(values, mode);
}

double CompiledStatement::rhs(std::span<const double> values, QuotientMode mode) const {
    return rhs_.eval(values, mode);
}

}  // namespace fuzzyrel
