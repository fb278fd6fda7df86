#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "fuzzyrel/error.hpp"
#include "fuzzyrel/registry.hpp"

using namespace fuzzyrel;

TEST(Registry, CatalogShape) {
    EXPECT_EQ(catalog_groups().size(), 16u);
    EXPECT_EQ(scalar_lemmas().size(), 8u);  // L1, L2 and six scalar records
    std::size_t records = 0;
    for (const auto& l : scalar_lemmas()) records += l.id[0] == 'S' ? 1 : 0;
    EXPECT_EQ(records, 6u);

    std::vector<std::string> order;
    for (const auto& e : list_theorems())
        if (order.empty() || order.back() != e.group) order.push_back(e.group);
    order.push_back("L1");
    order.push_back("L2");
    EXPECT_EQ(order, catalog_groups());
}

TEST(Registry, IdsAreUnique) {
    std::set<std::string> ids;
    for (const auto& e : list_theorems()) EXPECT_TRUE(ids.insert(e.id).second) << e.id;
    for (const auto& l : scalar_lemmas()) EXPECT_TRUE(ids.insert(l.id).second) << l.id;
}

TEST(Registry, EveryEntryParsesAtEverySweepValue) {
    for (const auto& e : list_theorems()) {
        EXPECT_FALSE(e.paper_ref.empty()) << e.id;
        for (const auto& v : parameter_sweep(e)) {
            const auto s = instantiate(e, v);
            EXPECT_EQ(s.equality_condition.has_value(), e.claim_kind.has_value()) << e.id;
            // canonical text reparses to the same statement
            const auto again = parse_statement(format_statement(s));
            EXPECT_EQ(format_statement(again), format_statement(s)) << e.id;
            EXPECT_EQ(again.lhs, s.lhs);
            EXPECT_EQ(again.rhs, s.rhs);
        }
    }
    for (const auto& l : scalar_lemmas()) {
        for (const auto& r : l.relations) EXPECT_NO_THROW(parse_constraint(r)) << l.id;
        for (const auto& g : l.given) EXPECT_NO_THROW(parse_constraint(g)) << l.id;
        if (l.equality_iff) EXPECT_NO_THROW(parse_condition(*l.equality_iff)) << l.id;
    }
}

TEST(Registry, Lookup) {
    EXPECT_EQ(get_theorem("T7").title, "Arithmetic and geometric means");
    EXPECT_EQ(get_theorem("P1").kind, EntryKind::Existence);
    EXPECT_THROW(get_theorem("T0"), UnknownTheorem);
    EXPECT_EQ(get_scalar_lemma("L1").variables.size(), 2u);
    EXPECT_THROW(get_scalar_lemma("S9"), UnknownTheorem);
}

TEST(Registry, AmGmStatement) {
    const auto s = instantiate(get_theorem("T7"));
    const auto expected = parse_statement("0.5*(A[+]B) >= (A.*B)^0.5 given a*b <= 0.25");
    EXPECT_EQ(s.lhs, expected.lhs);
    EXPECT_EQ(s.rhs, expected.rhs);
    EXPECT_EQ(s.relation, Relation::Superset);
    EXPECT_EQ(format_statement(s), "0.5 * (A [+] B) >= (A .* B)^0.5 given a * b <= 0.25 equality_iff a = b");
}

TEST(Registry, BernoulliInstantiation) {
    const auto& t10 = get_theorem("T10");
    EXPECT_EQ(instantiate_text(t10, 3),
              "(A[+]B)^3 >= A^3 [+] 3*(A^2 .* B) given a^2*b <= 1/3 equality_iff a = 0 and b = 0");
    const auto s = instantiate(t10, 3);
    EXPECT_EQ(s.lhs, parse_expr("(A[+]B)^3"));
    EXPECT_EQ(s.rhs, parse_expr("A^3 [+] 3*(A^2 .* B)"));
    for (double m = 1; m <= 8; ++m) EXPECT_NO_THROW(instantiate(t10, m));
    EXPECT_THROW(instantiate(t10, 0), ParameterOutOfRange);
    EXPECT_THROW(instantiate(t10, 9), ParameterOutOfRange);
    EXPECT_THROW(instantiate(t10, 2.5), ParameterOutOfRange);
}

TEST(Registry, PowerParameterRanges) {
    const auto& t12 = get_theorem("T12");
    EXPECT_THROW(instantiate(t12, 1.0), ParameterOutOfRange);
    EXPECT_THROW(instantiate(t12, -0.1), ParameterOutOfRange);
    EXPECT_NO_THROW(instantiate(t12, 0.999));
    // 1 / 2^p is a valid scaling factor on [0, 1)
    const auto s = instantiate(t12, 0.5);
    ASSERT_NE(s.lhs.as<Expr::Scale>(), nullptr);
    EXPECT_NEAR(s.lhs.as<Expr::Scale>()->kappa, 1 / std::sqrt(2.0), 1e-15);

    const auto& t4 = get_theorem("T4");
    EXPECT_NO_THROW(instantiate(t4, 7.5));
    EXPECT_THROW(instantiate(t4, -1), ParameterOutOfRange);
    EXPECT_THROW(instantiate(get_theorem("T7"), 1.0), ParameterOutOfRange);
}

TEST(Registry, DeclaredSweeps) {
    EXPECT_EQ(get_theorem("T4").parameter->sweep, (std::vector<double>{0, 0.25, 0.5, 0.75, 0.9, 1, 2}));
    EXPECT_EQ(get_theorem("T12").parameter->sweep, (std::vector<double>{0, 0.25, 0.5, 0.75, 0.99}));
    EXPECT_EQ(get_theorem("T10").parameter->sweep.size(), 8u);
    const auto& p = get_scalar_lemma("L2").variables.back();
    EXPECT_EQ(p.name, "p");
    EXPECT_EQ(p.hi, 2.0);
    EXPECT_EQ(p.step, 0.25);
}

TEST(Registry, ClaimKinds) {
    for (const char* id : {"T6", "T9", "T9r", "T12"})
        EXPECT_EQ(get_theorem(id).claim_kind, ClaimKind::SufficiencyOnly) << id;
    for (const char* id : {"T1", "T2a", "T3a", "T5", "T7", "T8", "T10"})
        EXPECT_EQ(get_theorem(id).claim_kind, ClaimKind::IffClaimed) << id;
    EXPECT_FALSE(get_theorem("T11").claim_kind.has_value());
    EXPECT_TRUE(get_theorem("T11").strict_claimed);
}
