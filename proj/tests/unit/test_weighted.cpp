#include "helpers.hpp"

#include <coxl2/builtins.hpp>
#include <coxl2/weighted.hpp>

#include <gtest/gtest.h>

using namespace coxl2;
using namespace coxl2::testing;

TEST(Weighted, DodecahedralAboveThreshold)
{
    CoxeterSystem w = builtin_system("dodecahedral");
    GrowthData g(w);
    BettiReport rep = betti_formula(chamber(w), g, {rat(8)});
    EXPECT_EQ(rep.method, BettiMethod::formula_Rinv);
    // concentrated in the top degree
    EXPECT_EQ(rep.degrees, (std::vector<Rational>{rat(0), rat(0), rat(0), rat(7, 729)}));
    // 1/W(8) = (1-8)(1-64+64)/(1+8)^3 = -7/729, and chi_q = 1/W(q)
    EXPECT_EQ(rep.euler, g.inverse_at({rat(8)}));
    EXPECT_EQ(rep.alternating_sum(), rep.euler);
}

TEST(Weighted, DodecahedralBelowThreshold)
{
    CoxeterSystem w = builtin_system("dodecahedral");
    GrowthData g(w);
    BettiReport rep = betti_formula(chamber(w), g, {rat(1, 10)});
    EXPECT_EQ(rep.method, BettiMethod::formula_R);
    EXPECT_EQ(rep.degrees[0], g.inverse_at({rat(1, 10)}));
    for (std::size_t i = 1; i < rep.degrees.size(); ++i) EXPECT_EQ(rep.degrees[i], 0);
}

TEST(Weighted, IntermediateRegionIsNotComputable)
{
    CoxeterSystem w = builtin_system("dodecahedral");
    GrowthData g(w);
    EXPECT_THROW(betti_formula(chamber(w), g, {rat(1)}), NotComputable);
    EXPECT_THROW(betti_formula(chamber(w), g, {rat(7)}), NotComputable);
}

TEST(Weighted, FiniteGroupDirectMatchesFormula)
{
    // finite W: b^0 = 1/W(q) for the chamber, other degrees vanish
    for (const char* name : {"a2", "b2", "i2-5"}) {
        CoxeterSystem w = builtin_system(name);
        GrowthData g(w);
        MirroredComplex k = chamber(w);
        for (const Rational& q : {rat(1, 3), rat(1), rat(5, 2)}) {
            BettiReport direct = direct_betti_finite(k, g, {q});
            BettiReport formula = betti_formula(k, g, {q});
            EXPECT_EQ(direct.degrees, formula.degrees) << name;
            Rational inv = g.inverse_at({q});
            EXPECT_EQ(direct.degrees[0], inv) << name;
        }
    }
}

TEST(Weighted, CircleSystemTwoParameters)
{
    CoxeterSystem w = builtin_system("a1xa1");
    GrowthData g(w);
    MirroredComplex z = circle_complex(w);
    Multiparam q{rat(2), rat(3)};
    // b^0 = 1/((1+q1)(1+q2)), b^1 = q1 q2 / ((1+q1)(1+q2))
    std::vector<Rational> expected{rat(1, 12), rat(1, 2)};
    EXPECT_EQ(direct_betti_finite(z, g, q).degrees, expected);
    EXPECT_EQ(betti_formula(z, g, q).degrees, expected);
}

TEST(Weighted, CochainComplexIsAdjoint)
{
    CoxeterSystem w = builtin_system("a2");
    FiniteGroup group(w);
    WeightedCochainComplex c(chamber(w), group, {rat(3, 2)});
    EXPECT_TRUE(c.check_adjointness());
    EXPECT_TRUE(c.check_theta());
    // delta^{i+1} delta^i = 0
    for (int i = 0; i + 1 < c.top_degree(); ++i) {
        Matrix dd = c.coboundary(i + 1) * c.coboundary(i);
        EXPECT_EQ(dd, Matrix(dd.rows(), dd.cols()));
    }
}

TEST(Weighted, EulerCharacteristicTwoWays)
{
    CoxeterSystem w = builtin_system("triangle-(3,3,3)");
    GrowthData g(w);
    MirroredComplex k = chamber(w);
    for (const Rational& q : {rat(1, 5), rat(2), rat(9)})
        EXPECT_EQ(euler_characteristic(k, g, {q}), euler_characteristic_by_types(k, g, {q}));
}

TEST(Weighted, RuinsConcentrateInTopDegree)
{
    CoxeterSystem w = builtin_system("a2");
    Multiparam q{rat(3)};
    for (Subset t = 0; t <= 3; ++t) {
        RuinReport r = ruin_homology_finite(w, 3, t, q);
        Rational total = 0;
        for (const auto& d : r.dims) total += d;
        EXPECT_EQ(total, r.expected) << t;
        if (r.expected != 0) EXPECT_EQ(r.concentrated_in, cardinality(t)) << t;
    }
}
