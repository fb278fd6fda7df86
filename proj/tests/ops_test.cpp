#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fuzzyrel/error.hpp"
#include "fuzzyrel/ops.hpp"

using namespace fuzzyrel;

namespace {

constexpr QuotientMode kLimit = QuotientMode::Limit;

double k(BinaryOp op, double a, double b) { return kernel::apply(op, a, b, kLimit); }

std::vector<double> grid(int steps) {
    std::vector<double> out;
    for (int i = 0; i <= steps; ++i) out.push_back(static_cast<double>(i) / steps);
    return out;
}

FuzzySet one(double d) { return make_fuzzy_set(Universe({"x"}), {d}); }

}  // namespace

TEST(Kernels, DocumentedValues) {
    EXPECT_EQ(kernel::set_union(0.3, 0.7), 0.7);
    EXPECT_EQ(kernel::intersection(0.3, 0.7), 0.3);
    EXPECT_EQ(kernel::algebraic_sum(0.5, 0.5), 0.75);
    EXPECT_EQ(kernel::algebraic_product(0.5, 0.5), 0.25);
    EXPECT_EQ(kernel::bounded_sum(0.6, 0.7), 1.0);
    EXPECT_DOUBLE_EQ(kernel::bounded_sum(0.2, 0.3), 0.5);
    EXPECT_NEAR(kernel::bounded_product(0.6, 0.7), 0.3, 1e-15);
    EXPECT_EQ(kernel::bounded_product(0.2, 0.3), 0.0);
    EXPECT_EQ(kernel::bounded_difference(0.9, 0.4), 0.5);
    EXPECT_EQ(kernel::bounded_difference(0.4, 0.9), 0.0);
    EXPECT_DOUBLE_EQ(kernel::bounded_quotient(0.3, 0.6, kLimit), 0.5);
    EXPECT_EQ(kernel::bounded_quotient(0.6, 0.3, kLimit), 1.0);
    EXPECT_EQ(kernel::scale(0.5, 0.8), 0.4);
    EXPECT_EQ(kernel::power(0.25, 0.5), 0.5);
    EXPECT_EQ(kernel::power(0.5, 2.0), 0.25);
    EXPECT_EQ(kernel::power(0.0, 0.0), 1.0);
}

TEST(Kernels, IdentityAndAbsorbingElements) {
    for (double a : grid(20)) {
        EXPECT_EQ(kernel::set_union(a, 0.0), a);
        EXPECT_EQ(kernel::set_union(a, a), a);
        EXPECT_EQ(kernel::intersection(a, 1.0), a);
        EXPECT_EQ(kernel::intersection(a, 0.0), 0.0);
        EXPECT_EQ(kernel::algebraic_sum(a, 0.0), a);
        EXPECT_EQ(kernel::algebraic_sum(1.0, a), 1.0);
        EXPECT_EQ(kernel::algebraic_product(a, 1.0), a);
        EXPECT_EQ(kernel::algebraic_product(a, 0.0), 0.0);
        EXPECT_EQ(kernel::bounded_sum(a, 0.0), a);
        EXPECT_EQ(kernel::bounded_product(a, 1.0), a);
        EXPECT_EQ(kernel::bounded_difference(a, 0.0), a);
        EXPECT_EQ(kernel::bounded_quotient(a, 1.0, kLimit), a);
        EXPECT_EQ(kernel::scale(1.0, a), a);
        EXPECT_EQ(kernel::scale(0.0, a), 0.0);
    }
}

// Oracle: the limit of min{a/b, 1} as b -> 0+ evaluated at small positive b.
TEST(Kernels, QuotientLimitConventionMatchesSmallDivisorLimit) {
    const double a = 0.2;
    for (double b : {1e-6, 1e-9}) EXPECT_EQ(std::min(a / b, 1.0), 1.0);
    EXPECT_EQ(kernel::bounded_quotient(a, 0.0, kLimit), 1.0);
    EXPECT_EQ(kernel::bounded_quotient(0.0, 0.0, kLimit), 0.0);
    EXPECT_THROW(kernel::bounded_quotient(a, 0.0, QuotientMode::Strict), ZeroDegreeDivisor);
}

TEST(Kernels, ClosureOnFineGrid) {
    const auto g = grid(100);
    for (BinaryOp op : kAllBinaryOps) {
        auto kern = binary_kernel(op);
        EXPECT_EQ(kern.arity, 2u);
        for (double a : g)
            for (double b : g) {
                const double args[] = {a, b};
                const double v = kern(args);
                ASSERT_TRUE(v >= 0.0 && v <= 1.0) << kern.name << "(" << a << "," << b << ")";
            }
    }
    for (double kappa : g) {
        auto kern = scale_kernel(kappa);
        for (double a : g) {
            const double args[] = {a};
            ASSERT_TRUE(kern(args) >= 0.0 && kern(args) <= 1.0);
        }
    }
    for (double p : {0.0, 0.01, 0.5, 1.0, 2.0, 7.5}) {
        auto kern = power_kernel(p);
        for (double a : g) {
            const double args[] = {a};
            ASSERT_TRUE(kern(args) >= 0.0 && kern(args) <= 1.0);
        }
    }
}

TEST(Kernels, Commutativity) {
    const BinaryOp ops[] = {BinaryOp::Union,          BinaryOp::Intersection,
                            BinaryOp::AlgebraicSum,   BinaryOp::AlgebraicProduct,
                            BinaryOp::BoundedSum,     BinaryOp::BoundedProduct};
    const auto g = grid(100);
    for (BinaryOp op : ops)
        for (double a : g)
            for (double b : g) ASSERT_EQ(k(op, a, b), k(op, b, a)) << to_string(op);
}

TEST(Kernels, AssociativityOnGrid) {
    const BinaryOp ops[] = {BinaryOp::Union,          BinaryOp::Intersection,
                            BinaryOp::AlgebraicSum,   BinaryOp::AlgebraicProduct,
                            BinaryOp::BoundedSum,     BinaryOp::BoundedProduct};
    const auto g = grid(20);
    for (BinaryOp op : ops)
        for (double a : g)
            for (double b : g)
                for (double c : g)
                    ASSERT_NEAR(k(op, k(op, a, b), c), k(op, a, k(op, b, c)), 1e-12)
                        << to_string(op) << " at " << a << "," << b << "," << c;
}

TEST(Kernels, Monotonicity) {
    const auto g = grid(20);
    for (BinaryOp op : kAllBinaryOps) {
        const bool antitone_second =
            op == BinaryOp::BoundedDifference || op == BinaryOp::BoundedQuotient;
        for (std::size_t i = 0; i + 1 < g.size(); ++i)
            for (double other : g) {
                // first argument
                ASSERT_LE(k(op, g[i], other), k(op, g[i + 1], other) + 1e-12) << to_string(op);
                // second argument
                if (antitone_second)
                    ASSERT_GE(k(op, other, g[i]) + 1e-12, k(op, other, g[i + 1])) << to_string(op);
                else
                    ASSERT_LE(k(op, other, g[i]), k(op, other, g[i + 1]) + 1e-12) << to_string(op);
            }
    }
}

TEST(SetOps, IdentitiesWithConstants) {
    Universe u({"x1", "x2", "x3"});
    auto a = make_fuzzy_set(u, {0.0, 0.35, 1.0});
    auto x = universal_set(u);
    auto o = empty_set(u);
    const Tolerance exact = Tolerance::exact();
    EXPECT_TRUE(equals(set_union(a, o), a, exact));
    EXPECT_TRUE(equals(intersection(a, x), a, exact));
    EXPECT_TRUE(equals(algebraic_sum(a, o), a, exact));
    EXPECT_TRUE(equals(algebraic_product(a, x), a, exact));
    EXPECT_TRUE(equals(bounded_sum(a, o), a, exact));
    EXPECT_TRUE(equals(bounded_product(a, x), a, exact));
    EXPECT_TRUE(equals(bounded_difference(a, o), a, exact));
    EXPECT_TRUE(equals(bounded_quotient(a, x), a, exact));
    EXPECT_TRUE(equals(scalar_multiply(1.0, a), a, exact));
    EXPECT_TRUE(equals(scalar_multiply(0.0, a), o, exact));
    EXPECT_TRUE(equals(power(a, 0.0), x, exact));
}

TEST(SetOps, UniverseMismatch) {
    auto a = make_fuzzy_set(Universe({"x"}), {0.5});
    auto b = make_fuzzy_set(Universe({"y"}), {0.5});
    EXPECT_THROW(set_union(a, b), UniverseMismatch);
    EXPECT_THROW(bounded_quotient(a, b), UniverseMismatch);
}

TEST(SetOps, QuotientDivisorChecks) {
    Universe u({"x1", "x2"});
    auto a = make_fuzzy_set(u, {0.2, 0.0});
    auto b = make_fuzzy_set(u, {0.0, 0.5});
    EXPECT_THROW(bounded_quotient(a, empty_set(u)), EmptyDivisor);
    EXPECT_THROW(bounded_quotient(a, empty_set(u), QuotientMode::Strict), EmptyDivisor);
    try {
        bounded_quotient(a, b, QuotientMode::Strict);
        FAIL() << "expected ZeroDegreeDivisor";
    } catch (const ZeroDegreeDivisor& e) {
        EXPECT_EQ(e.element(), "x1");
    }
    auto q = bounded_quotient(a, b);
    EXPECT_EQ(q.degree_at(0), 1.0);
    EXPECT_EQ(q.degree_at(1), 0.0);
}

TEST(SetOps, ScalarAndExponentValidation) {
    auto a = one(0.8);
    EXPECT_THROW(scalar_multiply(1.5, a), ScalarOutOfRange);
    EXPECT_THROW(scalar_multiply(-0.1, a), ScalarOutOfRange);
    EXPECT_THROW(power(a, -1.0), NegativeExponent);
    EXPECT_THROW(scale_kernel(2.0), ScalarOutOfRange);
    EXPECT_THROW(power_kernel(-0.5), NegativeExponent);
    EXPECT_EQ(scalar_multiply(0.5, a).degree_at(0), 0.4);
}

TEST(SetOps, NaturalMultipleRequiresHypothesis) {
    EXPECT_DOUBLE_EQ(natural_multiple(3.0, one(0.25)).degree_at(0), 0.75);
    EXPECT_THROW(natural_multiple(3.0, one(0.5)), DegreeOutOfRange);
    EXPECT_THROW(natural_multiple(2.5, one(0.1)), ScalarOutOfRange);
}

TEST(SetOps, PowerNatMatchesRealPower) {
    EXPECT_EQ(power_nat(one(0.5), 3).degree_at(0), 0.125);
    EXPECT_EQ(power_nat(one(0.9), 2).degree_at(0), 0.81);
    EXPECT_EQ(power_nat(one(0.37), 1).degree_at(0), 0.37);
    EXPECT_THROW(power_nat(one(0.5), 0), InvalidArgument);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Universe u({"x1", "x2", "x3"});
    for (int trial = 0; trial < 200; ++trial) {
        auto a = make_fuzzy_set(u, {unit(rng), unit(rng), unit(rng)});
        for (unsigned n = 1; n <= 6; ++n)
            EXPECT_TRUE(equals(power_nat(a, n), power(a, n))) << "n=" << n;
    }
    auto a = one(0.5);
    EXPECT_EQ(power(a, 2.0).degree_at(0), algebraic_product(a, a).degree_at(0));
}

// Set-level results must equal the elementwise kernel exactly.
TEST(SetOps, CoherentWithKernels) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> size(1, 3);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = size(rng);
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
        Universe u(labels);
        std::vector<double> da(n), db(n);
        for (int i = 0; i < n; ++i) {
            da[i] = unit(rng);
            db[i] = std::min(unit(rng) + 1e-3, 1.0);
        }
        auto a = make_fuzzy_set(u, da);
        auto b = make_fuzzy_set(u, db);
        for (BinaryOp op : kAllBinaryOps) {
            auto s = apply(op, a, b);
            for (int i = 0; i < n; ++i) ASSERT_EQ(s.degree_at(i), k(op, da[i], db[i]));
        }
        const double kappa = unit(rng);
        const double p = 3.0 * unit(rng);
        for (int i = 0; i < n; ++i) {
            ASSERT_EQ(scalar_multiply(kappa, a).degree_at(i), kernel::scale(kappa, da[i]));
            ASSERT_EQ(power(a, p).degree_at(i), kernel::power(da[i], p));
        }
    }
}
