#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyrel/core.hpp"

namespace fuzzyrel {

// How the bounded quotient treats a zero divisor degree.
//   Limit:  min{a/b, 1} extended by its limit b -> 0+, i.e. 1 if a > 0, 0 if a = 0.
//   Strict: any zero divisor degree is an error.
enum class QuotientMode { Limit, Strict };

std::string_view to_string(QuotientMode mode) noexcept;

enum class BinaryOp {
    Union,
    Intersection,
    AlgebraicSum,
    AlgebraicProduct,
    BoundedSum,
    BoundedProduct,
    BoundedDifference,
    BoundedQuotient,
};

inline constexpr BinaryOp kAllBinaryOps[] = {
    BinaryOp::Union,          BinaryOp::Intersection,      BinaryOp::AlgebraicSum,
    BinaryOp::AlgebraicProduct, BinaryOp::BoundedSum,      BinaryOp::BoundedProduct,
    BinaryOp::BoundedDifference, BinaryOp::BoundedQuotient,
};

std::string_view to_string(BinaryOp op) noexcept;

// Scalar kernels. Inputs are assumed to be valid degrees; every result is
// clamped into [0, 1] to absorb rounding.
namespace kernel {

double set_union(double a, double b) noexcept;
double intersection(double a, double b) noexcept;
double algebraic_sum(double a, double b) noexcept;
double algebraic_product(double a, double b) noexcept;
double bounded_sum(double a, double b) noexcept;
double bounded_product(double a, double b) noexcept;
double bounded_difference(double a, double b) noexcept;
// Throws ZeroDegreeDivisor in strict mode when b == 0.
double bounded_quotient(double a, double b, QuotientMode mode);
double scale(double kappa, double a) noexcept;
// Natural-number multiple k*a, as in m(A^{m-1} . B). The caller's hypothesis
// must keep the product in [0, 1]; overshoot beyond 1e-9 throws DegreeOutOfRange.
double multiple(double k, double a);
// 0^0 = 1.
double power(double a, double p) noexcept;

double apply(BinaryOp op, double a, double b, QuotientMode mode);

}  // namespace kernel

// A pointwise operation viewed as a pure function [0,1]^arity -> [0,1].
struct DegreeKernel {
    std::string name;
    std::size_t arity = 0;
    std::function<double(std::span<const double>)> fn;

    double operator()(std::span<const double> args) const { return fn(args); }
};

DegreeKernel binary_kernel(BinaryOp op, QuotientMode mode = QuotientMode::Limit);
DegreeKernel scale_kernel(double kappa);           // throws ScalarOutOfRange
DegreeKernel power_kernel(double p);               // throws NegativeExponent

// Set-level operations; binary ones throw UniverseMismatch on distinct universes.
FuzzySet set_union(const FuzzySet& a, const FuzzySet& b);
FuzzySet intersection(const FuzzySet& a, const FuzzySet& b);
FuzzySet algebraic_sum(const FuzzySet& a, const FuzzySet& b);
FuzzySet algebraic_product(const FuzzySet& a, const FuzzySet& b);
FuzzySet bounded_sum(const FuzzySet& a, const FuzzySet& b);
FuzzySet bounded_product(const FuzzySet& a, const FuzzySet& b);
FuzzySet bounded_difference(const FuzzySet& a, const FuzzySet& b);
// Throws EmptyDivisor when b is identically 0, ZeroDegreeDivisor (strict mode)
// when any divisor degree is 0.
FuzzySet bounded_quotient(const FuzzySet& a, const FuzzySet& b,
                          QuotientMode mode = QuotientMode::Limit);
FuzzySet apply(BinaryOp op, const FuzzySet& a, const FuzzySet& b,
               QuotientMode mode = QuotientMode::Limit);

// 0 <= kappa <= 1, otherwise ScalarOutOfRange.
FuzzySet scalar_multiply(double kappa, const FuzzySet& a);
// Natural multiple k >= 1; see kernel::multiple.
FuzzySet natural_multiple(double k, const FuzzySet& a);
// p >= 0, otherwise NegativeExponent. power(a, 0) is the universal set.
FuzzySet power(const FuzzySet& a, double p);
// n - 1 successive algebraic products; n >= 1.
FuzzySet power_nat(const FuzzySet& a, unsigned n);

}  // namespace fuzzyrel
