#include "helpers.hpp"

#include <coxl2/builtins.hpp>
#include <coxl2/piecewise.hpp>
#include <coxl2/right_angled.hpp>
#include <coxl2/weighted.hpp>

#include <gtest/gtest.h>

using namespace coxl2;
using namespace coxl2::testing;

namespace {

Rational b(const CalculusResult& r, std::size_t i, const Rational& q)
{
    return i < r.betti.size() ? r.betti[i].evaluate(q) : Rational(0);
}

}  // namespace

TEST(Calculus, PointsClosedForm)
{
    for (int k = 2; k <= 5; ++k) {
        CalculusResult r = calculus_points(k);
        for (const Rational& q : {rat(1, 10), rat(1, 7), rat(1, 2), rat(1), rat(3)}) {
            Rational t = (k - 1) * q;
            Rational below = (1 - t) / (1 + q), above = (t - 1) / (1 + q);
            if (t < 1) {
                EXPECT_EQ(b(r, 0, q), below) << k << " " << q;
                EXPECT_EQ(b(r, 1, q), 0);
            } else {
                EXPECT_EQ(b(r, 0, q), 0) << k << " " << q;
                EXPECT_EQ(b(r, 1, q), above) << k << " " << q;
            }
        }
    }
}

TEST(Calculus, OctahedraClosedForm)
{
    for (int n = 1; n <= 4; ++n) {
        CalculusResult r = calculus_octahedron(n);
        Rational q = rat(1, 3);
        EXPECT_EQ(b(r, 0, q), pow((1 - q) / (1 + q), n));
        for (int i = 1; i <= n; ++i) EXPECT_EQ(b(r, i, q), 0);
        q = rat(4);
        EXPECT_EQ(b(r, n, q), pow((q - 1) / (q + 1), n));
        for (int i = 0; i < n; ++i) EXPECT_EQ(b(r, i, q), 0);
        // q = 1 is L^2 of a group acting on R^n: everything vanishes
        for (int i = 0; i <= n; ++i) EXPECT_EQ(b(r, i, rat(1)), 0);
    }
}

TEST(Calculus, ConeDividesByOnePlusQ)
{
    CalculusResult l = betti_calculus("union(P2, O2)");
    CalculusResult c = calculus_cone(l);
    for (const Rational& q : {rat(1, 9), rat(1, 2), rat(2), rat(5)})
        for (std::size_t i = 0; i < l.betti.size(); ++i) EXPECT_EQ(b(c, i, q), b(l, i, q) / (q + 1));
}

TEST(Calculus, SuspensionShiftsOrScales)
{
    CalculusResult l = calculus_points(3);
    CalculusResult s = calculus_suspension(l);
    Rational q = rat(1, 4);
    for (std::size_t i = 0; i < l.betti.size(); ++i) EXPECT_EQ(b(s, i, q), b(l, i, q) * (1 - q) / (1 + q));
    q = rat(3);
    EXPECT_EQ(b(s, 0, q), 0);
    for (std::size_t i = 0; i < l.betti.size(); ++i) EXPECT_EQ(b(s, i + 1, q), b(l, i, q) * (q - 1) / (q + 1));
}

TEST(Calculus, AgreesWithChamberBettiOutsideIntermediateRegion)
{
    // O3 is the nerve of the octahedral group; compare with the chamber formula
    CalculusResult r = betti_calculus("O3");
    CoxeterSystem w = racg_from_complex(r.complex);
    GrowthData g(w);
    MirroredComplex k = chamber(w);
    for (const Rational& q : {rat(1, 3), rat(30)}) {
        auto rep = betti_formula(k, g, {q});
        for (std::size_t i = 0; i < rep.degrees.size(); ++i) EXPECT_EQ(rep.degrees[i], b(r, i, q)) << q;
    }
    // octahedral at q = 30: b^3 = (29/31)^3
    EXPECT_EQ(b(r, 3, rat(30)), rat(24389, 29791));
}

TEST(Calculus, ExpressionErrors)
{
    EXPECT_THROW(betti_calculus("join(P2"), ParseError);
    EXPECT_THROW(betti_calculus("frob(P2)"), Unsupported);
    EXPECT_NO_THROW(betti_calculus("join(P3, cone(O2))"));
}

TEST(RightAngled, ChiQIsFaceSeries)
{
    // chi_q(polygon m) = 1 - m q/(1+q) + m q^2/(1+q)^2
    RationalFunction chi = chi_q(polygon(5));
    EXPECT_EQ(chi, urf({1, -3, 1}, {1, 2, 1}));
    EXPECT_EQ(chi_q(points(3)), urf({1, -2}, {1, 1}));
    EXPECT_EQ(chi_q(empty_complex()), RationalFunction(1, Rational(1)));
}

TEST(RightAngled, HPolynomialIdentity)
{
    for (const auto& l : {octahedron(3), polygon(6), flag_complex(icosahedron_graph())}) {
        HpolyCheck c = verify_hpoly_identity(l, l.dimension() + 1);
        EXPECT_TRUE(c.equal);
        EXPECT_EQ(c.inverse_growth, c.from_h);
    }
    HpolyCheck c = verify_hpoly_identity(flag_complex(icosahedron_graph()), 3);
    EXPECT_EQ(c.h, (std::vector<Rational>{rat(1), rat(9), rat(9), rat(1)}));
}

TEST(RightAngled, SquareSumOfOctahedra)
{
    SimplicialComplex o = octahedron(3);
    SimplicialComplex s = square_sum(o, 0, o, 0);
    // two octahedra minus a vertex each, glued along a square: 5 + 5 - 4 vertices
    EXPECT_EQ(s.f_vector(), (std::vector<long>{1, 6, 12, 8}));
    EXPECT_TRUE(is_flag(s));
    EXPECT_THROW(square_sum(flag_complex(icosahedron_graph()), 0, o, 0), InvalidArgument);
}

TEST(RightAngled, ExistenceExampleComplexes)
{
    ExistenceReport r = example_existence(10);
    EXPECT_TRUE(r.flag_l);
    EXPECT_TRUE(r.flag_a_hat);
    EXPECT_EQ(r.chi_a_built, r.chi_a);
    EXPECT_EQ(r.chi_a_hat_built, r.chi_a_hat);
    EXPECT_EQ(r.chi_l_built, r.chi_l);
    EXPECT_EQ(existence_complexes(10).l.num_vertices(), 30u);
}
