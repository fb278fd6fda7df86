#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "fuzzyrel/core.hpp"
#include "fuzzyrel/expr.hpp"
#include "fuzzyrel/ops.hpp"

namespace fuzzyrel {

using SetEnv = std::map<std::string, FuzzySet>;
// Keyed by set-variable name ("A"), value is that set's degree at one element.
using DegreeEnv = std::map<std::string, double>;
// Keyed by arithmetic variable name as written ("a", "alpha").
using ArithEnv = std::map<std::string, double>;

// Set-level evaluation; every node delegates to the set operations. All bound
// sets must share one universe, which X and O are instantiated on.
FuzzySet eval_set(const Expr& e, const SetEnv& env, QuotientMode mode = QuotientMode::Limit);

// Degree-level evaluation through the scalar kernels.
double eval_degree(const Expr& e, const DegreeEnv& env, QuotientMode mode = QuotientMode::Limit);

double eval_arith(const Arith& a, const ArithEnv& env);

// Comparisons admit `slack` in the permissive direction: a <= b holds when
// a <= b + slack, a = b when |a - b| <= slack. Strict comparisons require a
// margin larger than slack: a < b holds when a + slack < b.
bool compare(double lhs, Comparator cmp, double rhs, double slack) noexcept;
bool holds(const Constraint& c, const ArithEnv& env, double slack);
bool holds(const Condition& c, const ArithEnv& env, double slack);

// Pointwise relation between two degrees (or sets) under a tolerance.
bool relation_holds(double lhs, Relation rel, double rhs, double slack) noexcept;

// Flattened postfix programs with variables resolved to tuple slots; these are
// what the verifier runs in its inner loops. They call the same kernels as
// eval_degree.
class CompiledExpr {
public:
    CompiledExpr(const Expr& e, const std::vector<std::string>& variables);
    double eval(std::span<const double> values, QuotientMode mode) const;

private:
    enum class Code { Load, One, Zero, Binary, Scale, Multiple, Power };
    struct Instr {
        Code code;
        std::size_t slot = 0;
        BinaryOp op = BinaryOp::Union;
        double param = 0.0;
    };
    void emit(const Expr& e, const std::vector<std::string>& variables, std::size_t depth);

    std::vector<Instr> code_;
    std::size_t max_depth_ = 0;
};

class CompiledArith {
public:
    CompiledArith(const Arith& a, const std::vector<std::string>& variables);
    double eval(std::span<const double> values) const;

private:
    enum class Code { Load, Const, Neg, Add, Sub, Mul, Div, Pow, Min, Max, Sqrt };
    struct Instr {
        Code code;
        std::size_t slot = 0;
        double value = 0.0;
    };
    void emit(const Arith& a, const std::vector<std::string>& variables, std::size_t depth);

    std::vector<Instr> code_;
    std::size_t max_depth_ = 0;
};

struct CompiledConstraint {
    CompiledConstraint(const Constraint& c, const std::vector<std::string>& variables);
    bool holds(std::span<const double> values, double slack) const;

    CompiledArith lhs;
    Comparator cmp;
    CompiledArith rhs;
};

struct CompiledCondition {
    CompiledCondition(const Condition& c, const std::vector<std::string>& variables);
    bool holds(std::span<const double> values, double slack) const;

    std::vector<std::vector<CompiledConstraint>> disjuncts;
};

// A statement bound to its variable order: slot i holds the degree of
// statement.variables[i]; constraints refer to the lowercase aliases.
class CompiledStatement {
public:
    explicit CompiledStatement(const RelationStatement& s);

    std::size_t arity() const noexcept { return variables_.size(); }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    Relation relation() const noexcept { return relation_; }
    bool has_equality_condition() const noexcept { return equality_.has_value(); }

    bool constraints_hold(std::span<const double> values, double slack) const;
    bool equality_condition_holds(std::span<const double> values, double slack) const;
    double lhs(std::span<const double> values, QuotientMode mode) const;
    double rhs(std::span<const double> values, QuotientMode mode) const;

private:
    std::vector<std::string> variables_;
    Relation relation_;
    CompiledExpr lhs_;
    CompiledExpr rhs_;
    std::vector<CompiledConstraint> constraints_;
    std::optional<CompiledCondition> equality_;
};

}  // namespace fuzzyrel
