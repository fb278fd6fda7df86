#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fuzzyrel/ops.hpp"

namespace fuzzyrel {

// ---------------------------------------------------------------------------
// Fuzzy-set expressions
// ---------------------------------------------------------------------------

struct ExprNode;

// Immutable expression tree with shared structure. Copying is cheap.
class Expr {
public:
    struct Var {
        std::string name;
    };
    struct Universal {};
    struct Empty {};
    struct Binary;
    struct Scale;
    struct Power;

    // Factories enforce the node invariants and throw InvalidArgument.
    static Expr var(std::string name);
    static Expr universal();
    static Expr empty();
    static Expr binary(BinaryOp op, Expr left, Expr right);
    // kappa in [0, 1], or a natural multiple k >= 1.
    static Expr scale(double kappa, Expr inner);
    static Expr power(Expr base, double exponent);

    const ExprNode& node() const noexcept { return *node_; }
    template <class T>
    const T* as() const noexcept;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const ExprNode> node_;
};

struct Expr::Binary {
    BinaryOp op;
    Expr left;
    Expr right;
};

struct Expr::Scale {
    double kappa;
    Expr inner;
};

struct Expr::Power {
    Expr base;
    double exponent;
};

struct ExprNode {
    std::variant<Expr::Var, Expr::Universal, Expr::Empty, Expr::Binary, Expr::Scale, Expr::Power>
        value;
};

template <class T>
const T* Expr::as() const noexcept {
    return std::get_if<T>(&node_->value);
}

bool is_valid_set_variable(std::string_view name) noexcept;
bool is_valid_scale(double kappa) noexcept;

// Set variables in first-appearance (left-to-right) order.
std::vector<std::string> free_variables(const Expr& e);

// Binary operators split into two precedence tiers; multiplicative binds tighter.
bool is_multiplicative(BinaryOp op) noexcept;
std::string_view op_symbol(BinaryOp op) noexcept;

// ---------------------------------------------------------------------------
// Degree-level arithmetic and constraints
// ---------------------------------------------------------------------------

struct ArithNode;

// Real arithmetic over lowercase degree variables: literals, + - * / ^,
// unary minus, and min(x, y), max(x, y), sqrt(x).
class Arith {
public:
    enum class Op { Add, Sub, Mul, Div, Pow };
    enum class Func { Min, Max, Sqrt };

    struct Number {
        double value;
    };
    struct Variable {
        std::string name;
    };
    struct Negate;
    struct Binary;
    struct Call;

    static Arith number(double value);
    static Arith variable(std::string name);
    static Arith negate(Arith inner);
    static Arith binary(Op op, Arith left, Arith right);
    static Arith call(Func func, std::vector<Arith> args);

    const ArithNode& node() const noexcept { return *node_; }
    template <class T>
    const T* as() const noexcept;

    friend bool operator==(const Arith& a, const Arith& b);

private:
    explicit Arith(std::shared_ptr<const ArithNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const ArithNode> node_;
};

struct Arith::Negate {
    Arith inner;
};
struct Arith::Binary {
    Op op;
    Arith left;
    Arith right;
};
struct Arith::Call {
    Func func;
    std::vector<Arith> args;
};

struct ArithNode {
    std::variant<Arith::Number, Arith::Variable, Arith::Negate, Arith::Binary, Arith::Call> value;
};

template <class T>
const T* Arith::as() const noexcept {
    return std::get_if<T>(&node_->value);
}

enum class Comparator { Le, Lt, Ge, Gt, Eq };

std::string_view to_string(Comparator cmp) noexcept;

// One comparison between two arithmetic terms.
struct Constraint {
    Arith lhs;
    Comparator cmp;
    Arith rhs;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Disjunction of conjunctions of comparisons ("and" binds tighter than "or").
struct Condition {
    std::vector<std::vector<Constraint>> disjuncts;

    friend bool operator==(const Condition&, const Condition&) = default;
};

std::vector<std::string> free_variables(const Arith& a);

// Lowercase degree alias of a set variable: "A" -> "a", "A1" -> "a1".
std::string degree_alias(std::string_view set_variable);
// Inverse of degree_alias.
std::string set_variable_for(std::string_view degree_variable);

// ---------------------------------------------------------------------------
// Relation statements
// ---------------------------------------------------------------------------

enum class Relation { Subset, Superset, Equal };

std::string_view to_string(Relation rel) noexcept;

struct RelationStatement {
    Expr lhs;
    Relation relation;
    Expr rhs;
    // Free set variables of lhs, rhs, constraints and equality condition,
    // in first-appearance order.
    std::vector<std::string> variables;
    std::vector<Constraint> constraints;
    std::optional<Condition> equality_condition;
};

// Recomputes `variables` for the statement's current parts.
void collect_variables(RelationStatement& s);
RelationStatement make_statement(Expr lhs, Relation rel, Expr rhs,
                                 std::vector<Constraint> constraints = {},
                                 std::optional<Condition> equality_condition = std::nullopt);

// ---------------------------------------------------------------------------
// Lexer and parser
// ---------------------------------------------------------------------------

enum class TokenKind {
    SetVar,      // A, B1
    DegreeVar,   // a, b1, alpha, min
    Number,
    Universal,   // X
    Empty,       // O
    Union,       // |
    Intersection,// &
    AlgSum,      // .+
    AlgProd,     // .*
    BoundedSum,  // [+]
    BoundedProd, // [*]
    BoundedDiff, // [-]
    BoundedQuot, // [/]
    Caret,
    Star,
    Slash,
    Plus,
    Minus,
    LParen,
    RParen,
    Comma,
    Le,
    Ge,
    EqEq,
    Lt,
    Gt,
    Eq,
    KwGiven,
    KwEqualityIff,
    KwAnd,
    KwOr,
    End,
};

std::string_view to_string(TokenKind kind) noexcept;

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t position;  // byte offset into the input
    double number = 0.0;   // valid for TokenKind::Number

    friend bool operator==(const Token&, const Token&) = default;
};

// Longest-match lexing; whitespace is skipped. The result always ends with an
// End token. Throws LexError on illegal characters or malformed numbers.
std::vector<Token> tokenize(std::string_view input);

// Throws ParseError unless the tokens form exactly one expression.
Expr parse_expr(const std::vector<Token>& tokens);
Expr parse_expr(std::string_view input);
RelationStatement parse_statement(std::string_view input);
Constraint parse_constraint(std::string_view input);
Condition parse_condition(std::string_view input);
Arith parse_arith(std::string_view input);

// ---------------------------------------------------------------------------
// Pretty printing
// ---------------------------------------------------------------------------

// Shortest decimal text that reads back to the same double.
std::string format_number(double value);
// Canonical text; parse_expr(format_expr(e)) == e.
std::string format_expr(const Expr& e);
std::string format_arith(const Arith& a);
std::string format_constraint(const Constraint& c);
std::string format_condition(const Condition& c);
std::string format_statement(const RelationStatement& s);

}  // namespace fuzzyrel
