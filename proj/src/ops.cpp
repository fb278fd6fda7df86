#include "fuzzyrel/ops.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "fuzzyrel/error.hpp"

namespace fuzzyrel {

std::string_view to_string(QuotientMode mode) noexcept {
    return mode == QuotientMode::Strict ? "strict" : "limit";
}

std::string_view to_string(BinaryOp op) noexcept {
    switch (op) {
        case BinaryOp::Union: return "union";
        case BinaryOp::Intersection: return "intersection";
        case BinaryOp::AlgebraicSum: return "algebraic_sum";
        case BinaryOp::AlgebraicProduct: return "algebraic_product";
        case BinaryOp::BoundedSum: return "bounded_sum";
        case BinaryOp::BoundedProduct: return "bounded_product";
        case BinaryOp::BoundedDifference: return "bounded_difference";
        case BinaryOp::BoundedQuotient: return "bounded_quotient";
    }
    return "?";
}

namespace kernel {
namespace {

inline double clamp01(double x) noexcept { return std::clamp(x, 0.0, 1.0); }

}  // namespace

double set_union(double a, double b) noexcept { return std::max(a, b); }
double intersection(double a, double b) noexcept { return std::min(a, b); }
// a + b - ab evaluated as hi + lo(1 - hi): symmetric, with exact identity (0)
// and absorbing (1) elements.
double algebraic_sum(double a, double b) noexcept {
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return clamp01(hi + lo * (1.0 - hi));
}
double algebraic_product(double a, double b) noexcept { return clamp01(a * b); }
double bounded_sum(double a, double b) noexcept { return std::min(a + b, 1.0); }
// a + b - 1 evaluated as lo - (1 - hi): symmetric, with an exact identity (1).
double bounded_product(double a, double b) noexcept {
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return std::max(lo - (1.0 - hi), 0.0);
}
double bounded_difference(double a, double b) noexcept { return std::max(a - b, 0.0); }

double bounded_quotient(double a, double b, QuotientMode mode) {
    if (b == 0.0) {
        if (mode == QuotientMode::Strict) throw ZeroDegreeDivisor("<degree>");
        return a > 0.0 ? 1.0 : 0.0;
    }
    return std::min(a / b, 1.0);
}

double scale(double kappa, double a) noexcept { return clamp01(kappa * a); }

double multiple(double k, double a) {
    const double value = k * a;
    if (value > 1.0 + 1e-9) throw DegreeOutOfRange(0, value);
    return clamp01(value);
}

double power(double a, double p) noexcept {
    if (p == 0.0) return 1.0;
    return clamp01(std::pow(a, p));
}

double apply(BinaryOp op, double a, double b, QuotientMode mode) {
    switch (op) {
        case BinaryOp::Union: return set_union(a, b);
        case BinaryOp::Intersection: return intersection(a, b);
        case BinaryOp::AlgebraicSum: return algebraic_sum(a, b);
        case BinaryOp::AlgebraicProduct: return algebraic_product(a, b);
        case BinaryOp::BoundedSum: return bounded_sum(a, b);
        case BinaryOp::BoundedProduct: return bounded_product(a, b);
        case BinaryOp::BoundedDifference: return bounded_difference(a, b);
        case BinaryOp::BoundedQuotient: return bounded_quotient(a, b, mode);
    }
    return 0.0;
}

}  // namespace kernel

namespace {

void check_kappa(double kappa) {
    if (!(kappa >= 0.0 && kappa <= 1.0)) throw ScalarOutOfRange(kappa);
}

void check_exponent(double p) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw NegativeExponent(p);
}

template <class F>
FuzzySet map_pointwise(const FuzzySet& a, const FuzzySet& b, F&& f) {
    require_same_universe(a, b);
    auto da = a.degrees();
    auto db = b.degrees();
    std::vector<double> out(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) out[i] = f(da[i], db[i]);
    return FuzzySet::from_valid(a.universe(), std::move(out));
}

template <class F>
FuzzySet map_pointwise(const FuzzySet& a, F&& f) {
    auto da = a.degrees();
    std::vector<double> out(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) out[i] = f(da[i]);
    return FuzzySet::from_valid(a.universe(), std::move(out));
}

}  // namespace

DegreeKernel binary_kernel(BinaryOp op, QuotientMode mode) {
    return DegreeKernel{std::string(to_string(op)), 2, [op, mode](std::span<const double> x) {
                            return kernel::apply(op, x[0], x[1], mode);
                        }};
}

DegreeKernel scale_kernel(double kappa) {
    check_kappa(kappa);
    return DegreeKernel{fmt::format("scale[{}]", kappa), 1,
                        [kappa](std::span<const double> x) { return kernel::scale(kappa, x[0]); }};
}

DegreeKernel power_kernel(double p) {
    check_exponent(p);
    return DegreeKernel{fmt::format("power[{}]", p), 1,
                        [p](std::span<const double> x) { return kernel::power(x[0], p); }};
}

FuzzySet set_union(const FuzzySet& a, const FuzzySet& b) {
    return map_pointwise(a, b, kernel::set_union);
}
FuzzySet intersection(const FuzzySet& a, const FuzzySet& b) {
    return map_pointwise(a, b, kernel::intersection);
}
FuzzySet algebraic_sum(const FuzzySet& a, const FuzzySet& b) {
    return map_pointwise(a, b, kernel::algebraic_sum);
}
FuzzySet algebraic_product(const FuzzySet& a, const FuzzySet& b) {
    return map_pointwise(a, b, kernel::algebraic_product);
}
FuzzySet bounded_sum(const FuzzySet& a, const FuzzySet& b) {
    return map_pointwise(a, b, kernel::bounded_sum);
}
FuzzySet bounded_product(const FuzzySet& a, const FuzzySet& b) {
    return map_pointwise(a, b, kernel::bounded_product);
}
FuzzySet bounded_difference(const FuzzySet& a, const FuzzySet& b) {
    return map_pointwise(a, b, kernel::bounded_difference);
}

FuzzySet bounded_quotient(const FuzzySet& a, const FuzzySet& b, QuotientMode mode) {
    require_same_universe(a, b);
    auto db = b.degrees();
    if (std::all_of(db.begin(), db.end(), [](double v) { return v == 0.0; })) throw EmptyDivisor();
    if (mode == QuotientMode::Strict) {
        for (std::size_t i = 0; i < db.size(); ++i) {
            if (db[i] == 0.0) throw ZeroDegreeDivisor(b.universe()[i]);
        }
    }
    return map_pointwise(a, b, [mode](double x, double y) {
        return kernel::bounded_quotient(x, y, mode);
    });
}

FuzzySet apply(BinaryOp op, const FuzzySet& a, const FuzzySet& b, QuotientMode mode) {
    if (op == BinaryOp::BoundedQuotient) return bounded_quotient(a, b, mode);
    return map_pointwise(a, b, [op](double x, double y) {
        return kernel::apply(op, x, y, QuotientMode::Limit);
    });
}

FuzzySet scalar_multiply(double kappa, const FuzzySet& a) {
    check_kappa(kappa);
    return map_pointwise(a, [kappa](double x) { return kernel::scale(kappa, x); });
}

FuzzySet natural_multiple(double k, const FuzzySet& a) {
    if (!(k >= 1.0) || k != std::floor(k)) throw ScalarOutOfRange(k);
    return map_pointwise(a, [k](double x) { return kernel::multiple(k, x); });
}

FuzzySet power(const FuzzySet& a, double p) {
    check_exponent(p);
    return map_pointwise(a, [p](double x) { return kernel::power(x, p); });
}

FuzzySet power_nat(const FuzzySet& a, unsigned n) {
    if (n == 0) throw InvalidArgument("power_nat requires n >= 1");
    FuzzySet result = a;
    for (unsigned i = 1; i < n; ++i) result = algebraic_product(result, a);
    return result;
}

}  // namespace fuzzyrel
